#pragma once

// Slow, independent reference computations. Nothing here calls the library's
// search routines; only the Graph value type and PerfectMatching container
// are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "antiforce/graph.hpp"
#include "antiforce/matching.hpp"

namespace oracle {

using antiforce::Edge;
using antiforce::Graph;
using antiforce::PerfectMatching;
using antiforce::Vertex;

inline constexpr std::uint32_t kInf = 0xffffffffu;

/// Floyd-Warshall.
inline std::vector<std::vector<std::uint32_t>> distances(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = d[i][j] >= kInf ? kInf : static_cast<std::uint32_t>(d[i][j]);
  return out;
}

/// Perfect matchings as sorted edge lists, by include/exclude over the edge list.
inline std::vector<std::vector<Edge>> perfect_matchings(const Graph& g,
                                                        const std::vector<Edge>& removed = {}) {
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
  const auto n = g.vertex_count();
  std::vector<std::vector<Edge>> out;
  std::vector<bool> covered(n, false);
  std::vector<Edge> chosen;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t count) {
    if (2 * count == n) {
      out.push_back(chosen);
      return;
    }
    if (i == edges.size()) return;
    auto [u, v] = edges[i];
    if (!covered[u] && !covered[v]) {
      covered[u] = covered[v] = true;
      chosen.push_back(edges[i]);
      go(i + 1, count + 1);
      chosen.pop_back();
      covered[u] = covered[v] = false;
    }
    go(i + 1, count);
  };
  if (n % 2 == 0) go(0, 0);
  return out;
}

inline std::size_t count_perfect_matchings(const Graph& g, const std::vector<Edge>& removed = {}) {
  return perfect_matchings(g, removed).size();
}

inline std::vector<Edge> non_matching_edges(const Graph& g, const PerfectMatching& m) {
  std::vector<Edge> out;
  for (auto e : g.edges())
    if (!m.contains(e)) out.push_back(e);
  return out;
}

/// Anti-forcing by definition: M is the only perfect matching left.
inline bool is_antiforcing(const Graph& g, const std::vector<Edge>& s) {
  return count_perfect_matchings(g, s) == 1;
}

struct BruteAf {
  std::size_t value = 0;
  std::vector<Edge> witness;
};

/// Subsets of E \ M by increasing size, each size in lexicographic order of
/// edge positions; the first anti-forcing subset is the lexicographically
/// least minimum one.
inline BruteAf brute_antiforcing(const Graph& g, const PerfectMatching& m) {
  const auto pool = non_matching_edges(g, m);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Edge> s;
      for (auto i : idx) s.push_back(pool[i]);
      if (is_antiforcing(g, s)) return {k, s};
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {pool.size(), pool};
}

/// Nice by definition: af attains (2e - v)/4.
inline bool is_nice_by_value(const Graph& g, const PerfectMatching& m) {
  return 4 * brute_antiforcing(g, m).value ==
         2 * g.edge_count() - g.vertex_count();
}

/// All simple cycles as vertex sequences starting at their least vertex.
inline std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const auto n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  std::function<void(Vertex, Vertex)> go = [&](Vertex s, Vertex cur) {
    for (Vertex w = s; w < n; ++w) {
      if (!g.adjacent(cur, w)) continue;
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w > s && !on[w]) {
        on[w] = true;
        path.push_back(w);
        go(s, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    go(s, s);
    on[s] = false;
  }
  return out;
}

inline bool alternates(const std::vector<Vertex>& c, const PerfectMatching& m) {
  if (c.size() % 2 != 0) return false;
  for (std::size_t phase = 0; phase < 2; ++phase) {
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) {
      const bool in_m = m.partner(c[i]) == c[(i + 1) % c.size()];
      ok = in_m == ((i + phase) % 2 == 0);
    }
    if (ok) return true;
  }
  return false;
}

inline std::size_t count_alternating_cycles(const Graph& g, const PerfectMatching& m,
                                            const std::vector<Edge>& removed = {}) {
  std::size_t count = 0;
  for (const auto& c : simple_cycles(g)) {
    if (!alternates(c, m)) continue;
    bool survives = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto e = antiforce::make_edge(c[i], c[(i + 1) % c.size()]);
      if (std::find(removed.begin(), removed.end(), e) != removed.end()) survives = false;
    }
    count += survives;
  }
  return count;
}

/// Every vertex permutation (n <= 8) that preserves adjacency.
inline std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.vertex_count());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.adjacent(p[u], p[v])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool equivalent_by_brute_force(const Graph& g, const PerfectMatching& a, const PerfectMatching& b) {
  for (const auto& p : automorphisms(g)) {
    bool ok = true;
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) ok = b.partner(p[v]) == p[a.partner(v)];
    if (ok) return true;
  }
  return false;
}

/// Closure classes of the distance relation by label propagation to a fixed
/// point; each edge ends up labelled with the least edge index of its class.
inline std::vector<std::size_t> theta_labels(const Graph& g) {
  const auto d = distances(g);
  const auto m = g.edge_count();
  std::vector<std::size_t> label(m);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto [x, y] = g.edge(static_cast<antiforce::EdgeId>(a));
        auto [u, v] = g.edge(static_cast<antiforce::EdgeId>(b));
        if (a == b || d[x][u] + d[y][v] == d[x][v] + d[y][u]) continue;
        auto lo = std::min(label[a], label[b]);
        if (label[a] != lo || label[b] != lo) {
          label[a] = label[b] = lo;
          changed = true;
        }
      }
    }
  }
  return label;
}

inline std::size_t theta_class_count(const Graph& g) {
  auto l = theta_labels(g);
  return std::set<std::size_t>(l.begin(), l.end()).size();
}

inline bool connected_without(const Graph& g, std::optional<Vertex> drop) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  Vertex start = 0;
  while (drop && start == *drop) ++start;
  if (start >= n) return true;
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y = 0; y < n; ++y) {
      if (seen[y] || (drop && y == *drop) || !g.adjacent(x, y)) continue;
      seen[y] = true;
      ++reached;
      stack.push_back(y);
    }
  }
  return reached == n - (drop ? 1 : 0);
}

inline bool is_two_connected(const Graph& g) {
  if (g.vertex_count() < 3 || !connected_without(g, std::nullopt)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

/// Length of a shortest cycle (odd_only: shortest odd cycle), 0 if none.
/// BFS from every root: a non-tree edge xy closes a closed walk of length
/// d(x) + d(y) + 1 through the root, and the minimum over roots is exact.
inline std::size_t girth(const Graph& g, bool odd_only) {
  const auto n = g.vertex_count();
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::uint32_t> d(n, kInf);
    std::vector<Vertex> parent(n, s);
    std::vector<Vertex> queue{s};
    d[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex x = queue[h];
      for (Vertex y = 0; y < n; ++y) {
        if (!g.adjacent(x, y)) continue;
        if (d[y] == kInf) {
          d[y] = d[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t len = d[x] + d[y] + 1;
          if (odd_only && len % 2 == 0) continue;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace oracle
