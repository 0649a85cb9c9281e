#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "antiforce/matching.hpp"

namespace antiforce {

namespace detail {

// Backtracking isomorphism search. Vertices of g are placed in BFS order so
// every vertex after the first of its component has a placed neighbour, whose
// image's neighbourhood bounds the candidates. Vertices are coloured by
// degree and sorted neighbour-degree multiset. With matchings supplied, v and
// its partner are placed together: phi(mg(v)) = mh(phi(v)).
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h, const PerfectMatching* mg,
                    const PerfectMatching* mh)
      : g_(g), h_(h), mg_(mg), mh_(mh), phi_(g.vertex_count(), kUnset),
        mapped_g_(g.vertex_count()), used_h_(h.vertex_count()) {}

  std::optional<std::vector<Vertex>> run() {
    if (g_.vertex_count() != h_.vertex_count() || g_.edge_count() != h_.edge_count()) {
      return std::nullopt;
    }
    if (!colour()) return std::nullopt;
    build_order();
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr Vertex kUnset = InducedSubgraph::kNoVertex;

  static std::vector<std::size_t> signature(const Graph& x, Vertex v) {
    std::vector<std::size_t> sig{x.degree(v)};
    std::vector<std::size_t> nd;
    for_each_bit(x.neighbors(v), [&](Vertex y) { nd.push_back(x.degree(y)); });
    std::sort(nd.begin(), nd.end());
    sig.insert(sig.end(), nd.begin(), nd.end());
    return sig;
  }

  bool colour() {
    std::map<std::vector<std::size_t>, int> ids;
    std::map<int, long> balance;
    colour_g_.resize(g_.vertex_count());
    colour_h_.resize(h_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      auto [it, _] = ids.emplace(signature(g_, v), static_cast<int>(ids.size()));
      colour_g_[v] = it->second;
      ++balance[it->second];
    }
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      auto it = ids.find(signature(h_, v));
      if (it == ids.end()) return false;
      colour_h_[v] = it->second;
      --balance[it->second];
    }
    for (auto [c, b] : balance) {
      if (b != 0) return false;
    }
    return true;
  }

  void build_order() {
    std::vector<bool> seen(g_.vertex_count(), false);
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (seen[s]) continue;
      std::size_t head = order_.size();
      order_.push_back(s);
      seen[s] = true;
      while (head < order_.size()) {
        Vertex x = order_[head++];
        for_each_bit(g_.neighbors(x), [&](Vertex y) {
          if (!seen[y]) {
            seen[y] = true;
            order_.push_back(y);
          }
        });
      }
    }
  }

  bool consistent(Vertex v, Vertex w) const {
    if (used_h_.test(w) || colour_g_[v] != colour_h_[w]) return false;
    std::size_t placed_neighbours = 0;
    bool ok = true;
    for_each_bit(g_.neighbors(v), [&](Vertex y) {
      if (phi_[y] != kUnset) {
        ++placed_neighbours;
        if (!h_.adjacent(w, phi_[y])) ok = false;
      }
    });
    return ok && (h_.neighbors(w) & used_h_).count() == placed_neighbours;
  }

  bool assign(Vertex v, Vertex w) {
    if (phi_[v] != kUnset) return phi_[v] == w;
    if (!consistent(v, w)) return false;
    phi_[v] = w;
    mapped_g_.set(v);
    used_h_.set(w);
    trail_.push_back(v);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Vertex v = trail_.back();
      trail_.pop_back();
      used_h_.reset(phi_[v]);
      mapped_g_.reset(v);
      phi_[v] = kUnset;
    }
  }

  bool extend(std::size_t idx) {
    while (idx < order_.size() && phi_[order_[idx]] != kUnset) ++idx;
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];

    VertexSet candidates(h_.vertex_count());
    auto anchor = (g_.neighbors(v) & mapped_g_).find_first();
    if (anchor != VertexSet::npos) {
      candidates = h_.neighbors(phi_[anchor]);
    } else {
      candidates.set();
    }
    candidates -= used_h_;

    for (auto i = candidates.find_first(); i != VertexSet::npos; i = candidates.find_next(i)) {
      const auto w = static_cast<Vertex>(i);
      const std::size_t mark = trail_.size();
      bool ok = assign(v, w);
      if (ok && mg_ != nullptr) ok = assign(mg_->partner(v), mh_->partner(w));
      if (ok && extend(idx + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const PerfectMatching* mg_;
  const PerfectMatching* mh_;
  std::vector<int> colour_g_;
  std::vector<int> colour_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> phi_;
  VertexSet mapped_g_;
  VertexSet used_h_;
  std::vector<Vertex> trail_;
};

}  // namespace detail

/// Vertex bijection phi: V(g) -> V(h) with uv ∈ E(g) ⇔ phi(u)phi(v) ∈ E(h),
/// or nullopt. Deterministic.
inline std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  return detail::IsomorphismSearch(g, h, nullptr, nullptr).run();
}

inline bool is_automorphism(const Graph& g, const std::vector<Vertex>& phi) {
  if (phi.size() != g.vertex_count()) return false;
  std::vector<bool> hit(phi.size(), false);
  for (Vertex p : phi) {
    if (p >= phi.size() || hit[p]) return false;
    hit[p] = true;
  }
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(phi[u], phi[v])) return false;
  }
  return true;
}

/// Image of a matching under a vertex permutation.
inline PerfectMatching apply_permutation(const std::vector<Vertex>& phi, const PerfectMatching& m) {
  std::vector<Vertex> partner(m.vertex_count());
  for (Vertex v = 0; v < m.vertex_count(); ++v) partner[phi[v]] = phi[m.partner(v)];
  return PerfectMatching(std::move(partner));
}

}  // namespace antiforce
