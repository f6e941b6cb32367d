#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qec {

/// Simple undirected graph with 0-based vertex indices. Loops and duplicate
/// edges are rejected at insertion time; edges are kept sorted with u < v.
class Graph {
 public:
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  bool is_connected() const;
  /// Degree if every vertex has the same one, otherwise empty.
  /// A single-vertex or empty-edge graph is 0-regular.
  std::optional<int> regular_degree() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

/// Edge-list text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace qec
