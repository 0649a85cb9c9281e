#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antiforce/graph.hpp"

namespace antiforce {

/// Bitset over edge ids of a fixed graph.
using EdgeMask = boost::dynamic_bitset<std::uint64_t>;

/// Perfect matching stored as a fixed-point-free involution on the vertices.
class PerfectMatching {
 public:
  PerfectMatching() = default;

  explicit PerfectMatching(std::vector<Vertex> partner) : partner_(std::move(partner)) {
    for (Vertex v = 0; v < partner_.size(); ++v) {
      Vertex w = partner_[v];
      if (w >= partner_.size() || w == v || partner_[w] != v) {
        throw InvalidInput("partner map is not a fixed-point-free involution at vertex " +
                           std::to_string(v));
      }
    }
  }

  /// Throws InvalidInput unless `edges` covers each of 0..n-1 exactly once.
  static PerfectMatching from_edges(std::size_t n, std::span<const Edge> edges) {
    constexpr Vertex kFree = InducedSubgraph::kNoVertex;
    std::vector<Vertex> partner(n, kFree);
    for (auto e : edges) {
      if (e.u >= n || e.v >= n || e.u == e.v) throw InvalidInput("matching edge out of range");
      if (partner[e.u] != kFree || partner[e.v] != kFree) {
        throw InvalidInput("vertex covered twice by matching edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")");
      }
      partner[e.u] = e.v;
      partner[e.v] = e.u;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (partner[v] == kFree) throw InvalidInput("vertex " + std::to_string(v) + " is unmatched");
    }
    return PerfectMatching(std::move(partner));
  }

  static PerfectMatching from_edges(std::size_t n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  Vertex partner(Vertex v) const { return partner_[v]; }
  const std::vector<Vertex>& partners() const noexcept { return partner_; }
  std::size_t vertex_count() const noexcept { return partner_.size(); }
  std::size_t size() const noexcept { return partner_.size() / 2; }

  bool contains(Edge e) const { return e.u < partner_.size() && partner_[e.u] == e.v; }

  /// Matching edges ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex v = 0; v < partner_.size(); ++v) {
      if (v < partner_[v]) out.push_back({v, partner_[v]});
    }
    return out;
  }

  bool is_perfect_matching_of(const Graph& g) const {
    if (partner_.size() != g.vertex_count()) return false;
    for (Vertex v = 0; v < partner_.size(); ++v) {
      if (!g.adjacent(v, partner_[v])) return false;
    }
    return true;
  }

  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  std::vector<Vertex> partner_;
};

inline void require_perfect_matching(const Graph& g, const PerfectMatching& m, const char* who) {
  if (!m.is_perfect_matching_of(g)) {
    throw InvalidInput(std::string(who) + ": matching is not a perfect matching of the graph");
  }
}

/// Edge ids of M in g.
inline EdgeMask matching_mask(const Graph& g, const PerfectMatching& m) {
  EdgeMask mask(g.edge_count());
  for (auto e : m.edges()) mask.set(g.edge_id(e.u, e.v));
  return mask;
}

inline EdgeMask edge_mask(const Graph& g, const EdgeSet& s) {
  EdgeMask mask(g.edge_count());
  for (auto e : s) {
    EdgeId id = g.has_edge(e) ? g.edge_id(e.u, e.v) : kNoEdge;
    if (id == kNoEdge) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not in the graph");
    }
    mask.set(id);
  }
  return mask;
}

inline EdgeSet edge_set(const Graph& g, const EdgeMask& mask) {
  std::vector<Edge> out;
  for (auto i = mask.find_first(); i != EdgeMask::npos; i = mask.find_next(i)) {
    out.push_back(g.edge(static_cast<EdgeId>(i)));
  }
  return EdgeSet(std::move(out));
}

namespace detail {

// Backtracking over perfect matchings, always branching on the lowest
// unmatched vertex with partners ascending. `visit` returns false to stop.
class MatchingBacktracker {
 public:
  MatchingBacktracker(const Graph& g, std::function<bool(const std::vector<Vertex>&)> visit)
      : g_(g), visit_(std::move(visit)), partner_(g.vertex_count(), kFree),
        unmatched_(g.vertex_count()) {
    unmatched_.set();
  }

  void pin(Vertex u, Vertex v) {
    partner_[u] = v;
    partner_[v] = u;
    unmatched_.reset(u);
    unmatched_.reset(v);
  }

  void run() {
    if (g_.vertex_count() % 2 != 0) return;
    recurse();
  }

 private:
  static constexpr Vertex kFree = InducedSubgraph::kNoVertex;

  bool recurse() {
    auto first = unmatched_.find_first();
    if (first == VertexSet::npos) return visit_(partner_);
    // Dead end if some free vertex has no free neighbour left.
    for (auto x = first; x != VertexSet::npos; x = unmatched_.find_next(x)) {
      if (!g_.neighbors(static_cast<Vertex>(x)).intersects(unmatched_)) return true;
    }
    const auto v = static_cast<Vertex>(first);
    VertexSet options = g_.neighbors(v) & unmatched_;
    for (auto w = options.find_first(); w != VertexSet::npos; w = options.find_next(w)) {
      pin(v, static_cast<Vertex>(w));
      bool keep_going = recurse();
      unpin(v, static_cast<Vertex>(w));
      if (!keep_going) return false;
    }
    return true;
  }

  void unpin(Vertex u, Vertex v) {
    partner_[u] = kFree;
    partner_[v] = kFree;
    unmatched_.set(u);
    unmatched_.set(v);
  }

  const Graph& g_;
  std::function<bool(const std::vector<Vertex>&)> visit_;
  std::vector<Vertex> partner_;
  VertexSet unmatched_;
};

}  // namespace detail

/// Every perfect matching, in canonical order (lexicographic on the partner
/// map, which is the order the lowest-vertex branching produces).
inline std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<PerfectMatching> out;
  detail::MatchingBacktracker bt(g, [&](const std::vector<Vertex>& p) {
    out.emplace_back(p);
    return true;
  });
  bt.run();
  return out;
}

inline std::optional<PerfectMatching> first_perfect_matching(const Graph& g) {
  std::optional<PerfectMatching> out;
  detail::MatchingBacktracker bt(g, [&](const std::vector<Vertex>& p) {
    out.emplace(p);
    return false;
  });
  bt.run();
  return out;
}

/// First perfect matching (canonical order) that uses edge e.
inline std::optional<PerfectMatching> pm_containing_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e)) throw InvalidInput("pm_containing_edge: edge not in graph");
  std::optional<PerfectMatching> out;
  detail::MatchingBacktracker bt(g, [&](const std::vector<Vertex>& p) {
    out.emplace(p);
    return false;
  });
  bt.pin(e.u, e.v);
  bt.run();
  return out;
}

/// Cycle given by its vertex sequence; consecutive edges (and the closing
/// edge back to the first vertex) alternate between M and non-M.
struct AlternatingCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return out;
  }

  std::vector<Edge> non_matching_edges(const PerfectMatching& m) const {
    std::vector<Edge> out;
    for (auto e : edges()) {
      if (!m.contains(e)) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

/// True iff the cycle is simple, closed, uses edges of g, and alternates.
inline bool is_alternating_cycle(const Graph& g, const PerfectMatching& m,
                                 const AlternatingCycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 4 || vs.size() % 2 != 0) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i];
    Vertex b = vs[(i + 1) % vs.size()];
    Vertex z = vs[(i + vs.size() - 1) % vs.size()];
    if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) return false;
    if (m.contains(make_edge(a, b)) == m.contains(make_edge(z, a))) return false;
  }
  return true;
}

namespace detail {

// Depth-first search for M-alternating cycles whose least vertex is `start`.
// With target_length > 0 only cycles of exactly that length are reported.
// Neighbours are tried ascending, so the first hit is the lexicographically
// least vertex sequence among the admissible cycles.
class AlternatingCycleSearch {
 public:
  AlternatingCycleSearch(const Graph& g, const PerfectMatching& m, const EdgeMask* removed)
      : g_(g), m_(m), removed_(removed), on_path_(g.vertex_count()) {}

  std::optional<AlternatingCycle> from(Vertex start, std::size_t target_length) {
    // A cycle through start also passes its partner, so start is its least
    // vertex only if the partner is larger.
    if (m_.partner(start) < start) return std::nullopt;
    start_ = start;
    target_ = target_length;
    path_.assign(1, start);
    on_path_.reset();
    on_path_.set(start);
    // First step: partner or a non-M neighbour, whichever order is ascending.
    std::vector<Vertex> firsts;
    firsts.push_back(m_.partner(start));
    for_each_bit(g_.neighbors(start), [&](Vertex w) {
      if (w > start && w != m_.partner(start) && usable(start, w)) firsts.push_back(w);
    });
    std::sort(firsts.begin(), firsts.end());
    for (Vertex w : firsts) {
      const bool matched = (w == m_.partner(start));
      if (advance(w, /*need_matching_edge=*/!matched)) return AlternatingCycle{path_};
    }
    return std::nullopt;
  }

 private:
  bool usable(Vertex a, Vertex b) const {
    return removed_ == nullptr || !removed_->test(g_.edge_id(a, b));
  }

  bool advance(Vertex w, bool need_matching_edge) {
    path_.push_back(w);
    on_path_.set(w);
    if (dfs(w, need_matching_edge)) return true;
    on_path_.reset(w);
    path_.pop_back();
    return false;
  }

  bool dfs(Vertex cur, bool need_matching_edge) {
    const std::size_t len = path_.size();
    if (target_ != 0 && len > target_) return false;
    if (need_matching_edge) {
      Vertex w = m_.partner(cur);
      if (w == start_) return target_ == 0 || len == target_;
      if (w < start_ || on_path_.test(w) || (target_ != 0 && len == target_)) return false;
      return advance(w, false);
    }
    // Closing via a non-M edge is only legal when the first edge was in M,
    // which is exactly when start's partner sits at path_[1].
    const bool can_close = len >= 4 && path_[1] == m_.partner(start_) && g_.adjacent(cur, start_) &&
                           usable(cur, start_);
    if (can_close && (target_ == 0 || len == target_)) return true;
    if (target_ != 0 && len == target_) return false;
    const VertexSet& nb = g_.neighbors(cur);
    for (auto i = nb.find_next(start_); i != VertexSet::npos; i = nb.find_next(i)) {
      auto w = static_cast<Vertex>(i);
      if (w == m_.partner(cur) || on_path_.test(w) || !usable(cur, w)) continue;
      if (advance(w, true)) return true;
    }
    return false;
  }

  const Graph& g_;
  const PerfectMatching& m_;
  const EdgeMask* removed_;
  VertexSet on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::size_t target_ = 0;
};

}  // namespace detail

/// Shortest M-alternating cycle of g minus the masked edges, lexicographically
/// least vertex sequence (starting at its least vertex) among the shortest.
inline std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g,
                                                              const PerfectMatching& m,
                                                              const EdgeMask& removed) {
  detail::AlternatingCycleSearch search(g, m, &removed);
  for (std::size_t len = 4; len <= g.vertex_count(); len += 2) {
    for (Vertex s = 0; s + len <= g.vertex_count(); ++s) {
      if (auto c = search.from(s, len)) return c;
    }
  }
  return std::nullopt;
}

/// Any M-alternating cycle of g minus the masked edges (existence test).
inline bool has_alternating_cycle(const Graph& g, const PerfectMatching& m,
                                  const EdgeMask& removed) {
  detail::AlternatingCycleSearch search(g, m, &removed);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (search.from(s, 0)) return true;
  }
  return false;
}

inline std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g,
                                                              const PerfectMatching& m,
                                                              const EdgeSet& forbidden) {
  require_perfect_matching(g, m, "find_alternating_cycle");
  for (auto e : forbidden) {
    if (m.contains(e)) throw InvalidInput("find_alternating_cycle: forbidden set meets M");
  }
  return find_alternating_cycle(g, m, edge_mask(g, forbidden));
}

/// True iff M is the only perfect matching of g minus `removed`.
inline bool has_unique_pm(const Graph& g, const PerfectMatching& m, const EdgeSet& removed) {
  require_perfect_matching(g, m, "has_unique_pm");
  for (auto e : removed) {
    if (m.contains(e)) throw InvalidInput("has_unique_pm: M is not contained in the remaining edges");
  }
  return !has_alternating_cycle(g, m, edge_mask(g, removed));
}

/// An M-alternating 4-cycle x-y-v-u-x with xy, uv in M; recorded by its two
/// non-M edges (ids into the graph's edge list).
struct Alternating4Cycle {
  EdgeId first;
  EdgeId second;
};

/// All M-alternating 4-cycles. Two distinct ones never share a non-M edge,
/// so their number is a lower bound on any anti-forcing set.
inline std::vector<Alternating4Cycle> alternating_4cycles(const Graph& g, const PerfectMatching& m) {
  std::vector<Alternating4Cycle> out;
  auto me = m.edges();
  for (std::size_t i = 0; i < me.size(); ++i) {
    for (std::size_t j = i + 1; j < me.size(); ++j) {
      auto [x, y] = me[i];
      auto [u, v] = me[j];
      if (g.adjacent(x, u) && g.adjacent(y, v)) out.push_back({g.edge_id(x, u), g.edge_id(y, v)});
      if (g.adjacent(x, v) && g.adjacent(y, u)) out.push_back({g.edge_id(x, v), g.edge_id(y, u)});
    }
  }
  return out;
}

inline std::size_t count_alternating_4cycles(const Graph& g, const PerfectMatching& m) {
  require_perfect_matching(g, m, "count_alternating_4cycles");
  return alternating_4cycles(g, m).size();
}

}  // namespace antiforce
