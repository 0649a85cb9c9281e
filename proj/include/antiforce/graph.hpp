#pragma once

// Immutable simple undirected graph with dense vertex ids and bitset rows,
// plus the distance / subgraph / bipartition queries the rest of the library
// is built on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "antiforce/errors.hpp"

namespace antiforce {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Calls f(i) for every set bit i of a bitset, ascending.
template <class F>
void for_each_bit(const VertexSet& s, F&& f) {
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
    f(static_cast<Vertex>(i));
  }
}

/// Canonical sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;

  explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

  bool contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
  }

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
};

class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph on vertices 0..n-1. Duplicate pairs collapse;
  /// loops and out-of-range ids throw InvalidInput.
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") references a vertex >= " + std::to_string(n));
      }
      if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
      edges.push_back(make_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, VertexSet(n_));
    edge_index_.assign(n_ * n_, kNoEdge);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      auto [u, v] = edges_[id];
      adj_[u].set(v);
      adj_[v].set(u);
      edge_index_[u * n_ + v] = id;
      edge_index_[v * n_ + u] = id;
    }
  }

  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs)) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n, to_pairs(edges)) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  bool has_edge(Edge e) const { return e.u < n_ && e.v < n_ && adjacent(e.u, e.v); }

  /// Index of uv in edges(), or kNoEdge.
  EdgeId edge_id(Vertex u, Vertex v) const { return edge_index_[u * n_ + v]; }

  VertexSet empty_vertex_set() const { return VertexSet(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::vector<std::pair<Vertex, Vertex>> to_pairs(std::span<const Edge> edges) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges.size());
    for (auto e : edges) out.emplace_back(e.u, e.v);
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<EdgeId> edge_index_;
};

inline Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(n, pairs);
}

inline Graph from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return Graph(n, pairs);
}

/// Hop distances between all vertex pairs; pairs in different components hold
/// DistanceMatrix::kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// BFS distances from one source.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), DistanceMatrix::kUnreachable);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for_each_bit(g.neighbors(x), [&](Vertex y) {
      if (dist[y] == DistanceMatrix::kUnreachable) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    });
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.vertex_count(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

/// Connected components, each sorted ascending, ordered by least vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for_each_bit(g.neighbors(comp[i]), [&](Vertex y) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph id -> parent id, ascending
  std::vector<Vertex> from_parent;  // parent id -> subgraph id, kNoVertex if dropped

  static constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
};

/// G[S]. Subgraph ids follow ascending parent ids.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());
  out.from_parent.assign(g.vertex_count(), InducedSubgraph::kNoVertex);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    if (out.to_parent[i] >= g.vertex_count()) {
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(out.to_parent[i]) +
                         " out of range");
    }
    out.from_parent[out.to_parent[i]] = i;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [u, v] : g.edges()) {
    auto a = out.from_parent[u];
    auto b = out.from_parent[v];
    if (a != InducedSubgraph::kNoVertex && b != InducedSubgraph::kNoVertex) pairs.emplace_back(a, b);
  }
  out.graph = Graph(out.to_parent.size(), pairs);
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  return induced_subgraph(g, std::span<const Vertex>(vertices));
}

struct Bipartition {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

/// Two-coloring with the least vertex of every component on the X side, or
/// nullopt when an odd cycle exists.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex a = q.front();
      q.pop();
      bool clash = false;
      for_each_bit(g.neighbors(a), [&](Vertex b) {
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          q.push(b);
        } else if (side[b] == side[a]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (side[v] == 0 ? out.x : out.y).push_back(v);
  return out;
}

/// True iff the subgraph H (given by its vertices and edges, in G's ids)
/// preserves every pairwise distance of G. Throws when H is not a subgraph.
inline bool is_isometric_subgraph(const Graph& g, std::span<const Vertex> vertices,
                                  std::span<const Edge> edges) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Vertex> local(g.vertex_count(), InducedSubgraph::kNoVertex);
  for (Vertex i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count()) throw InvalidInput("is_isometric_subgraph: vertex out of range");
    local[vs[i]] = i;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto e : edges) {
    if (!g.has_edge(make_edge(e.u, e.v))) {
      throw InvalidInput("is_isometric_subgraph: (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") is not an edge of the host graph");
    }
    if (local[e.u] == InducedSubgraph::kNoVertex || local[e.v] == InducedSubgraph::kNoVertex) {
      throw InvalidInput("is_isometric_subgraph: edge endpoint outside the selected vertices");
    }
    pairs.emplace_back(local[e.u], local[e.v]);
  }
  Graph h(vs.size(), pairs);
  for (Vertex i = 0; i < vs.size(); ++i) {
    auto dh = bfs_distances(h, i);
    auto dg = bfs_distances(g, vs[i]);
    for (Vertex j = 0; j < vs.size(); ++j) {
      if (dh[j] != dg[vs[j]]) return false;
    }
  }
  return true;
}

inline bool is_isometric_subgraph(const Graph& g, const std::vector<Vertex>& vertices,
                                  const std::vector<Edge>& edges) {
  return is_isometric_subgraph(g, std::span<const Vertex>(vertices), std::span<const Edge>(edges));
}

}  // namespace antiforce
