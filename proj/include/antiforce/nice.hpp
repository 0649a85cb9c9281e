#pragma once

// Nice perfect matchings: those attaining af(G, M) = (2e - v)/4. They are
// recognised by a pairwise cross-adjacency test and correspond one-to-one to
// edge-involutions (order-two automorphisms moving every vertex to a
// neighbour), which is how they are enumerated.

#include <optional>
#include <vector>

#include "antiforce/isomorphism.hpp"
#include "antiforce/matching.hpp"

namespace antiforce {

/// True iff for M-edges xy and uv: xu ∈ E ⇔ yv ∈ E and xv ∈ E ⇔ yu ∈ E.
inline bool is_nice(const Graph& g, const PerfectMatching& m) {
  require_perfect_matching(g, m, "is_nice");
  const auto me = m.edges();
  for (std::size_t i = 0; i < me.size(); ++i) {
    for (std::size_t j = i + 1; j < me.size(); ++j) {
      auto [x, y] = me[i];
      auto [u, v] = me[j];
      if (g.adjacent(x, u) != g.adjacent(y, v)) return false;
      if (g.adjacent(x, v) != g.adjacent(y, u)) return false;
    }
  }
  return true;
}

struct Involution {
  std::vector<Vertex> alpha;

  Vertex operator()(Vertex v) const { return alpha[v]; }
  friend auto operator<=>(const Involution&, const Involution&) = default;
};

/// True iff alpha is an edge-involution of g: alpha(alpha(v)) = v,
/// alpha(v) != v, v ~ alpha(v), and alpha preserves adjacency.
inline bool is_edge_involution(const Graph& g, const Involution& inv) {
  const auto& a = inv.alpha;
  if (a.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < a.size(); ++v) {
    if (a[v] >= a.size() || a[v] == v || a[a[v]] != v || !g.adjacent(v, a[v])) return false;
  }
  return is_automorphism(g, a);
}

/// The involution v -> partner(v). Throws NotNice when M fails the
/// cross-adjacency test (the map then is not an automorphism).
inline Involution involution_of(const Graph& g, const PerfectMatching& m) {
  require_perfect_matching(g, m, "involution_of");
  if (!is_nice(g, m)) throw NotNice("involution_of: matching is not nice");
  return Involution{m.partners()};
}

inline PerfectMatching matching_of(const Graph& g, const Involution& inv) {
  if (!is_edge_involution(g, inv)) throw InvalidInput("matching_of: not an edge-involution");
  return PerfectMatching(inv.alpha);
}

namespace detail {

// Backtracking over edge-involutions. The lowest unassigned vertex v is paired
// with a neighbour w; a pairing is consistent when alpha maps N(v) ∩ A onto
// N(w) ∩ A, A being the assigned vertices. After each pairing every
// unassigned vertex must keep at least one consistent partner.
class InvolutionSearch {
 public:
  explicit InvolutionSearch(const Graph& g)
      : g_(g), alpha_(g.vertex_count(), kUnset), assigned_(g.vertex_count()) {}

  std::vector<Involution> run() {
    if (g_.vertex_count() % 2 == 0) recurse();
    return std::move(found_);
  }

 private:
  static constexpr Vertex kUnset = InducedSubgraph::kNoVertex;

  VertexSet image_of_assigned_neighbours(Vertex v) const {
    VertexSet img(g_.vertex_count());
    for_each_bit(g_.neighbors(v) & assigned_, [&](Vertex y) { img.set(alpha_[y]); });
    return img;
  }

  bool compatible(Vertex w, const VertexSet& img_v) const {
    return img_v == (g_.neighbors(w) & assigned_);
  }

  VertexSet candidates(Vertex v) const {
    VertexSet free = ~assigned_;
    free.reset(v);
    VertexSet out = g_.neighbors(v) & free;
    const VertexSet img = image_of_assigned_neighbours(v);
    for (auto i = out.find_first(); i != VertexSet::npos; i = out.find_next(i)) {
      if (!compatible(static_cast<Vertex>(i), img)) out.reset(i);
    }
    return out;
  }

  bool every_free_vertex_has_option() const {
    VertexSet free = ~assigned_;
    for (auto u = free.find_first(); u != VertexSet::npos; u = free.find_next(u)) {
      if (candidates(static_cast<Vertex>(u)).none()) return false;
    }
    return true;
  }

  void recurse() {
    auto first = (~assigned_).find_first();
    if (first == VertexSet::npos) {
      found_.push_back(Involution{alpha_});
      return;
    }
    const auto v = static_cast<Vertex>(first);
    VertexSet opts = candidates(v);
    for (auto i = opts.find_first(); i != VertexSet::npos; i = opts.find_next(i)) {
      const auto w = static_cast<Vertex>(i);
      alpha_[v] = w;
      alpha_[w] = v;
      assigned_.set(v);
      assigned_.set(w);
      if (every_free_vertex_has_option()) recurse();
      assigned_.reset(v);
      assigned_.reset(w);
      alpha_[v] = kUnset;
      alpha_[w] = kUnset;
    }
  }

  const Graph& g_;
  std::vector<Vertex> alpha_;
  VertexSet assigned_;
  std::vector<Involution> found_;
};

}  // namespace detail

/// All edge-involutions, ascending lexicographically.
inline std::vector<Involution> enumerate_involutions(const Graph& g) {
  return detail::InvolutionSearch(g).run();
}

struct NiceSet {
  std::vector<PerfectMatching> matchings;  // canonical (partner-map) order

  std::size_t count() const noexcept { return matchings.size(); }
};

/// Every nice perfect matching. For a disconnected graph this is the product
/// of the component-wise sets: cross-component pairs impose nothing, in either
/// the cross-adjacency test or the involution search.
inline NiceSet enumerate_nice(const Graph& g) {
  NiceSet out;
  for (auto& inv : enumerate_involutions(g)) out.matchings.emplace_back(std::move(inv.alpha));
  std::sort(out.matchings.begin(), out.matchings.end());
  return out;
}

/// An automorphism phi of g with phi(M1) = M2, or nullopt.
inline std::optional<std::vector<Vertex>> are_equivalent(const Graph& g, const PerfectMatching& m1,
                                                         const PerfectMatching& m2) {
  require_perfect_matching(g, m1, "are_equivalent");
  require_perfect_matching(g, m2, "are_equivalent");
  return detail::IsomorphismSearch(g, g, &m1, &m2).run();
}

/// Partition of `set` (indices into set.matchings) under equivalence. Each
/// class is ascending and classes are ordered by their least index. Since
/// equivalence is an equivalence relation, testing a matching against one
/// representative per class suffices.
inline std::vector<std::vector<std::size_t>> equivalence_classes(const Graph& g, const NiceSet& set) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < set.matchings.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (are_equivalent(g, set.matchings[cls.front()], set.matchings[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

/// Checks that M restricted to G[S] is a nice perfect matching of G[S].
/// Throws InvalidInput when M ∩ E(S) does not cover S.
inline bool succession_check(const Graph& g, const PerfectMatching& m, const std::vector<Vertex>& s) {
  require_perfect_matching(g, m, "succession_check");
  auto sub = induced_subgraph(g, s);
  std::vector<Vertex> partner(sub.to_parent.size());
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
    Vertex p = sub.from_parent[m.partner(sub.to_parent[i])];
    if (p == InducedSubgraph::kNoVertex) {
      throw InvalidInput("succession_check: M ∩ E(S) is not a perfect matching of G[S]");
    }
    partner[i] = p;
  }
  return is_nice(sub.graph, PerfectMatching(std::move(partner)));
}

}  // namespace antiforce
