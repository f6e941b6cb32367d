#include "qec/sym_matrix.hpp"

#include <queue>
#include <string>

#include "qec/errors.hpp"

namespace qec {

SymMatrix::SymMatrix(Eigen::MatrixXd m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw ParameterError("SymMatrix: matrix is not square");
  }
  for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < mat_.cols(); ++j) {
      if (mat_(i, j) != mat_(j, i)) {
        throw ParameterError("SymMatrix: entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") breaks symmetry");
      }
    }
  }
}

SymMatrix SymMatrix::zero(int n) {
  SymMatrix m;
  m.mat_ = Eigen::MatrixXd::Zero(n, n);
  return m;
}

SymMatrix SymMatrix::from_symmetric_part(const Eigen::MatrixXd& m) {
  SymMatrix out;
  out.mat_ = 0.5 * (m + m.transpose());
  return out;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a = SymMatrix::zero(g.vertex_count());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymMatrix distance_matrix(const Graph& g) {
  const int n = g.vertex_count();
  SymMatrix d = SymMatrix::zero(n);
  std::vector<int> dist(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[static_cast<size_t>(t)] < 0) {
        throw PreconditionError("graph is disconnected: no path from " +
                                std::to_string(s) + " to " + std::to_string(t));
      }
      d.set(s, t, static_cast<double>(dist[static_cast<size_t>(t)]));
    }
  }
  return d;
}

}  // namespace qec
