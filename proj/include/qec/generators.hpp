#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qec/graph.hpp"

namespace qec {

enum class GraphFamily {
  path,
  cycle,
  complete,
  empty,
  complete_bipartite,
  star,
  petersen,
  random_regular,
};

GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily family);

/// Builds the named graph. Parameter meaning per family:
///   path n / cycle n / complete n / empty n      — vertex count
///   complete_bipartite a b                       — part sizes
///   star n                                       — leaf count (n+1 vertices)
///   petersen                                     — no parameters
///   random_regular n k                           — k-regular on n vertices,
///                                                  deterministic given seed
Graph generate(GraphFamily family, const std::vector<int>& params,
               std::uint64_t seed = 0);

}  // namespace qec
