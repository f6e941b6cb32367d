#include "qec/generators.hpp"

#include <random>
#include <set>

#include "qec/errors.hpp"

namespace qec {
namespace {

void expect_params(GraphFamily family, const std::vector<int>& params,
                   size_t count) {
  if (params.size() != count) {
    throw ParameterError(family_name(family) + " expects " +
                         std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
  for (int p : params) {
    if (p < 1) {
      throw ParameterError(family_name(family) +
                           ": size parameters must be >= 1");
    }
  }
}

// Draw uniformly from [0, n). Rejection keeps the result identical across
// platforms for a fixed mt19937_64 stream.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Pairing-model sampler: shuffle k stubs per vertex, pair consecutive stubs,
// retry on loops or duplicates.
Graph random_regular(int n, int k, std::uint64_t seed) {
  if (k >= n) {
    throw ParameterError("random_regular: degree " + std::to_string(k) +
                         " must be < vertex count " + std::to_string(n));
  }
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    throw ParameterError("random_regular: n*k must be even");
  }
  std::mt19937_64 rng(seed);
  const int retries = 1000;
  std::vector<int> stubs(static_cast<size_t>(n) * static_cast<size_t>(k));
  for (int attempt = 0; attempt < retries; ++attempt) {
    for (int v = 0; v < n; ++v) {
      for (int j = 0; j < k; ++j) stubs[static_cast<size_t>(v) * k + j] = v;
    }
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(bounded(rng, i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Graph g(n);
    for (auto [u, v] : seen) g.add_edge(u, v);
    return g;
  }
  throw NumericalError("random_regular: no simple pairing after " +
                       std::to_string(retries) + " attempts");
}

}  // namespace

GraphFamily parse_family(const std::string& name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "complete") return GraphFamily::complete;
  if (name == "empty") return GraphFamily::empty;
  if (name == "complete_bipartite") return GraphFamily::complete_bipartite;
  if (name == "star") return GraphFamily::star;
  if (name == "petersen") return GraphFamily::petersen;
  if (name == "random_regular") return GraphFamily::random_regular;
  throw ParameterError("unknown graph family '" + name + "'");
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::empty: return "empty";
    case GraphFamily::complete_bipartite: return "complete_bipartite";
    case GraphFamily::star: return "star";
    case GraphFamily::petersen: return "petersen";
    case GraphFamily::random_regular: return "random_regular";
  }
  throw ParameterError("unknown family enum value");
}

Graph generate(GraphFamily family, const std::vector<int>& params,
               std::uint64_t seed) {
  switch (family) {
    case GraphFamily::path: {
      expect_params(family, params, 1);
      Graph g(params[0]);
      for (int v = 0; v + 1 < params[0]; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case GraphFamily::cycle: {
      expect_params(family, params, 1);
      int n = params[0];
      if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
      Graph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case GraphFamily::complete: {
      expect_params(family, params, 1);
      int n = params[0];
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case GraphFamily::empty: {
      expect_params(family, params, 1);
      return Graph(params[0]);
    }
    case GraphFamily::complete_bipartite: {
      expect_params(family, params, 2);
      int a = params[0], b = params[1];
      Graph g(a + b);
      for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
      return g;
    }
    case GraphFamily::star: {
      expect_params(family, params, 1);
      int n = params[0];
      Graph g(n + 1);
      for (int v = 1; v <= n; ++v) g.add_edge(0, v);
      return g;
    }
    case GraphFamily::petersen: {
      expect_params(family, params, 0);
      Graph g(10);
      for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);        // outer 5-cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);              // spokes
      }
      return g;
    }
    case GraphFamily::random_regular: {
      expect_params(family, params, 2);
      return random_regular(params[0], params[1], seed);
    }
  }
  throw ParameterError("unknown family enum value");
}

}  // namespace qec
