#pragma once

#include <Eigen/Dense>

#include "qec/graph.hpp"

namespace qec {

/// Dense symmetric matrix. Symmetry is bitwise: the checked constructor
/// rejects any m(i,j) != m(j,i), and set() writes both triangles.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Eigen::MatrixXd m);

  static SymMatrix zero(int n);
  /// Symmetrizes 0.5*(m + m^T); for products like W^T D W whose asymmetry
  /// is pure round-off.
  static SymMatrix from_symmetric_part(const Eigen::MatrixXd& m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  double operator()(int i, int j) const { return mat_(i, j); }
  void set(int i, int j, double value) {
    mat_(i, j) = value;
    mat_(j, i) = value;
  }
  const Eigen::MatrixXd& mat() const { return mat_; }

 private:
  Eigen::MatrixXd mat_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// All-pairs shortest path distances by BFS from every vertex.
/// Throws PreconditionError naming an unreachable pair if g is disconnected.
SymMatrix distance_matrix(const Graph& g);

}  // namespace qec
