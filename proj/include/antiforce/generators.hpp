#pragma once

// Named graph families. Hypercube-family vertex ids are bit strings read
// little-endian: coordinate i (1-based) of a vertex is bit i-1 of its id.

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "antiforce/graph.hpp"

namespace antiforce {

enum class Family {
  complete,
  complete_bipartite,
  cycle,
  path,
  hypercube,
  folded_hypercube,
  enhanced_hypercube,
};

struct FamilySpec {
  Family family = Family::complete;
  int a = 0;  // n, or m for complete_bipartite
  int b = 0;  // second part for complete_bipartite, k for enhanced_hypercube
};

/// Class id -> edges. Hypercube families: 1..n are the coordinate classes
/// E_1..E_n; n+1 is the class of complement-style edges when the family has
/// any that are not already hypercube edges. Other families have no classes.
using LabeledClasses = std::map<int, EdgeSet>;

struct GeneratedGraph {
  Graph graph;
  LabeledClasses classes;
};

inline constexpr int kMaxCubeDimension = 12;

inline std::size_t hamming_distance(std::uint64_t x, std::uint64_t y, int n) {
  if (n < 0 || n > 63 || x >> n != 0 || y >> n != 0) {
    throw InvalidInput("hamming_distance: ids must be below 2^n");
  }
  return static_cast<std::size_t>(std::popcount(x ^ y));
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Q_n plus the edges x ~ x xor mask for every x. The extra edges form class
// n+1 unless they coincide with a coordinate class.
inline GeneratedGraph cube_with_mask(int n, std::uint32_t extra_mask) {
  const std::uint32_t count = 1u << n;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  LabeledClasses classes;
  for (int i = 1; i <= n; ++i) {
    std::vector<Edge> cls;
    const std::uint32_t bit = 1u << (i - 1);
    for (std::uint32_t x = 0; x < count; ++x) {
      if ((x & bit) == 0) {
        cls.push_back({x, x | bit});
        pairs.emplace_back(x, x | bit);
      }
    }
    classes.emplace(i, EdgeSet(std::move(cls)));
  }
  if (extra_mask != 0 && std::popcount(extra_mask) > 1) {
    std::vector<Edge> cls;
    for (std::uint32_t x = 0; x < count; ++x) {
      std::uint32_t y = x ^ extra_mask;
      if (x < y) {
        cls.push_back({x, y});
        pairs.emplace_back(x, y);
      }
    }
    classes.emplace(n + 1, EdgeSet(std::move(cls)));
  }
  return {Graph(count, pairs), std::move(classes)};
}

}  // namespace detail

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph(n, pairs);
}

/// K_{m,n}: parts {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite_graph(int m, int n) {
  detail::require(m >= 1 && n >= 1, "complete_bipartite: both parts must be non-empty");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) pairs.emplace_back(u, m + v);
  return Graph(m + n, pairs);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle: n must be >= 3");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  return Graph(n, pairs);
}

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return Graph(n, pairs);
}

inline GeneratedGraph hypercube(int n) {
  detail::require(n >= 1 && n <= kMaxCubeDimension, "hypercube: n out of range");
  return detail::cube_with_mask(n, 0);
}

/// FQ_n: Q_n plus x ~ complement(x).
inline GeneratedGraph folded_hypercube(int n) {
  detail::require(n >= 1 && n <= kMaxCubeDimension, "folded_hypercube: n out of range");
  return detail::cube_with_mask(n, (1u << n) - 1);
}

/// Q_{n,k}: Q_n plus edges complementing the first n-k coordinates and keeping
/// the last k. k = 0 gives FQ_n, k = n-1 gives Q_n.
inline GeneratedGraph enhanced_hypercube(int n, int k) {
  detail::require(n >= 1 && n <= kMaxCubeDimension, "enhanced_hypercube: n out of range");
  detail::require(k >= 0 && k <= n - 1, "enhanced_hypercube: k must satisfy 0 <= k <= n-1");
  return detail::cube_with_mask(n, (1u << (n - k)) - 1);
}

inline GeneratedGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return {complete_graph(spec.a), {}};
    case Family::complete_bipartite: return {complete_bipartite_graph(spec.a, spec.b), {}};
    case Family::cycle: return {cycle_graph(spec.a), {}};
    case Family::path: return {path_graph(spec.a), {}};
    case Family::hypercube: return hypercube(spec.a);
    case Family::folded_hypercube: return folded_hypercube(spec.a);
    case Family::enhanced_hypercube: return enhanced_hypercube(spec.a, spec.b);
  }
  throw InvalidInput("generate: unknown family");
}

inline const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names{
      {"complete", Family::complete},
      {"complete_bipartite", Family::complete_bipartite},
      {"cycle", Family::cycle},
      {"path", Family::path},
      {"hypercube", Family::hypercube},
      {"folded_hypercube", Family::folded_hypercube},
      {"enhanced_hypercube", Family::enhanced_hypercube},
  };
  return names;
}

}  // namespace antiforce
