#include "qec/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "qec/errors.hpp"

namespace qec {

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) {
    throw ParameterError("graph needs at least one vertex, got " +
                         std::to_string(vertex_count));
  }
  adjacency_.resize(static_cast<size_t>(vertex_count));
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : Graph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for " + std::to_string(vertex_count_) +
                         " vertices");
  }
  if (u == v) {
    throw ParameterError("loop at vertex " + std::to_string(u));
  }
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    throw ParameterError("duplicate edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
  }
  edges_.insert(it, e);
  adjacency_[static_cast<size_t>(u)].push_back(v);
  adjacency_[static_cast<size_t>(v)].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
  return adjacency_.at(static_cast<size_t>(v));
}

int Graph::degree(int v) const {
  return static_cast<int>(adjacency_.at(static_cast<size_t>(v)).size());
}

bool Graph::is_connected() const {
  std::vector<char> seen(static_cast<size_t>(vertex_count_), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adjacency_[static_cast<size_t>(u)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == vertex_count_;
}

std::optional<int> Graph::regular_degree() const {
  int d = degree(0);
  for (int v = 1; v < vertex_count_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<size_t>(vertex_count_)) {
    throw ParameterError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) {
    throw ParameterError("edge list: missing 'n m' header");
  }
  if (m < 0) throw ParameterError("edge list: negative edge count");
  Graph g(n);
  for (int k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw ParameterError("edge list: expected " + std::to_string(m) +
                           " edges, got " + std::to_string(k));
    }
    g.add_edge(u, v);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open " + path + " for writing");
  write_edge_list(g, out);
}

}  // namespace qec
