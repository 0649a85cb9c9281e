#pragma once

// Anti-forcing numbers. An anti-forcing set of a perfect matching M is a set
// S of non-M edges such that M is the unique perfect matching of G - S, i.e.
// S meets every M-alternating cycle. af(G, M) is exact here: a lazy
// hitting-set branch and bound that branches over the non-M edges of one
// surviving shortest alternating cycle at a time.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "antiforce/matching.hpp"
#include "antiforce/nice.hpp"

namespace antiforce {

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    auto g = std::gcd(n, d);
    if (g == 0) g = 1;
    if (d < 0) g = -g;
    return {n / g, d / g};
  }

  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct AfResult {
  std::size_t value = 0;
  EdgeSet witness;  // lexicographically least among minimum anti-forcing sets
  std::size_t lower_bound_c4 = 0;
  std::size_t nodes_explored = 0;
};

struct BoundsReport {
  std::int64_t cyclomatic = 0;  // e - v + (number of components)
  Rational quarter;             // (2e - v) / 4
  bool degree_parity_obstruction = false;
};

inline BoundsReport bounds(const Graph& g) {
  const auto v = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  BoundsReport r;
  r.cyclomatic = e - v + static_cast<std::int64_t>(connected_components(g).size());
  r.quarter = Rational::make(2 * e - v, 4);
  std::vector<std::size_t> per_degree(g.vertex_count() + 1, 0);
  for (Vertex x = 0; x < g.vertex_count(); ++x) ++per_degree[g.degree(x)];
  r.degree_parity_obstruction =
      std::any_of(per_degree.begin(), per_degree.end(), [](std::size_t c) { return c % 2 == 1; });
  return r;
}

namespace detail {

inline EdgeMask checked_non_matching_mask(const Graph& g, const PerfectMatching& m,
                                          const EdgeSet& s, const char* who) {
  require_perfect_matching(g, m, who);
  for (auto e : s) {
    if (m.contains(e)) throw InvalidInput(std::string(who) + ": set intersects M");
  }
  return edge_mask(g, s);
}

}  // namespace detail

inline bool is_antiforcing_set(const Graph& g, const PerfectMatching& m, const EdgeSet& s) {
  auto mask = detail::checked_non_matching_mask(g, m, s, "is_antiforcing_set");
  return !has_alternating_cycle(g, m, mask);
}

/// Greedy removal in ascending edge order. One pass suffices: anti-forcing is
/// monotone under supersets, so an edge kept once stays necessary.
inline EdgeSet minimalize_antiforcing_set(const Graph& g, const PerfectMatching& m, const EdgeSet& s) {
  auto mask = detail::checked_non_matching_mask(g, m, s, "minimalize_antiforcing_set");
  if (has_alternating_cycle(g, m, mask)) {
    throw InvalidInput("minimalize_antiforcing_set: input is not an anti-forcing set");
  }
  for (auto i = mask.find_first(); i != EdgeMask::npos; i = mask.find_next(i)) {
    mask.reset(i);
    if (has_alternating_cycle(g, m, mask)) mask.set(i);
  }
  return edge_set(g, mask);
}

/// E_A^w ∪ E(A): edges inside A, plus A-to-complement edges xy (x in A) whose
/// A-end carries the larger weight. `side` holds exactly one endpoint of every
/// M-edge; `weight[i]` is the weight of the i-th M-edge (ascending order) and
/// must be a permutation of 1..|M|. Always anti-forcing; exactly (2e-v)/4
/// edges when M is nice.
inline EdgeSet omega_antiforcing_set(const Graph& g, const PerfectMatching& m,
                                     const std::vector<Vertex>& side,
                                     const std::vector<std::size_t>& weight) {
  require_perfect_matching(g, m, "omega_antiforcing_set");
  const auto medges = m.edges();
  std::vector<int> in_a(g.vertex_count(), 0);
  for (Vertex a : side) {
    if (a >= g.vertex_count() || in_a[a]) throw InvalidInput("omega_antiforcing_set: bad side vertex");
    in_a[a] = 1;
  }
  for (auto [u, v] : medges) {
    if (in_a[u] + in_a[v] != 1) {
      throw InvalidInput("omega_antiforcing_set: side must contain exactly one end of each M-edge");
    }
  }
  if (weight.size() != medges.size()) throw InvalidInput("omega_antiforcing_set: weight size");
  {
    std::vector<std::size_t> sorted = weight;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i + 1) throw InvalidInput("omega_antiforcing_set: weight is not a bijection");
    }
  }
  std::vector<std::size_t> w(g.vertex_count());
  for (std::size_t i = 0; i < medges.size(); ++i) {
    w[medges[i].u] = weight[i];
    w[medges[i].v] = weight[i];
  }
  std::vector<Edge> out;
  for (auto e : g.edges()) {
    if (m.contains(e)) continue;
    if (in_a[e.u] && in_a[e.v]) {
      out.push_back(e);
    } else if (in_a[e.u] != in_a[e.v]) {
      Vertex a = in_a[e.u] ? e.u : e.v;
      Vertex b = in_a[e.u] ? e.v : e.u;
      if (w[a] > w[b]) out.push_back(e);
    }
  }
  EdgeSet result(std::move(out));
  if (has_alternating_cycle(g, m, edge_mask(g, result))) {
    throw std::logic_error("omega_antiforcing_set: construction is not anti-forcing");
  }
  return result;
}

/// The weighted construction with A = lower endpoint of every M-edge and
/// weights in canonical M-edge order.
inline EdgeSet omega_antiforcing_set(const Graph& g, const PerfectMatching& m) {
  std::vector<Vertex> side;
  std::vector<std::size_t> weight;
  for (auto e : m.edges()) {
    side.push_back(e.u);
    weight.push_back(weight.size() + 1);
  }
  return omega_antiforcing_set(g, m, side, weight);
}

namespace detail {

// Hitting-set search over the non-M edges. `chosen` is the partial anti-forcing
// set, `excluded` edges may not be chosen in this subtree.
class AntiforcingSearch {
 public:
  AntiforcingSearch(const Graph& g, const PerfectMatching& m)
      : g_(g), m_(m), four_cycles_(alternating_4cycles(g, m)) {}

  std::size_t nodes() const noexcept { return nodes_; }

  /// Smallest anti-forcing set of size <= limit containing `forced` and
  /// avoiding `excluded`; keeps improving until no smaller one exists.
  std::optional<EdgeMask> minimize(EdgeMask forced, EdgeMask excluded, std::size_t limit,
                                   bool stop_at_first) {
    best_.reset();
    limit_ = limit;
    stop_at_first_ = stop_at_first;
    done_ = false;
    branch(forced, excluded, forced.count());
    return best_;
  }

 private:
  void branch(EdgeMask& chosen, const EdgeMask& excluded, std::size_t size) {
    ++nodes_;
    std::size_t alive = 0;
    EdgeMask c4_edges(g_.edge_count());
    for (auto c : four_cycles_) {
      if (chosen.test(c.first) || chosen.test(c.second)) continue;
      if (excluded.test(c.first) && excluded.test(c.second)) return;
      ++alive;
      c4_edges.set(c.first);
      c4_edges.set(c.second);
    }
    if (size + alive > limit_) return;

    auto cycle = find_alternating_cycle(g_, m_, chosen);
    if (!cycle) {
      best_ = chosen;
      if (stop_at_first_ || size == 0) {
        done_ = true;
      } else {
        limit_ = size - 1;
      }
      return;
    }
    std::vector<EdgeId> candidates;
    bool disjoint_from_c4 = true;
    for (auto e : cycle->non_matching_edges(m_)) {
      EdgeId id = g_.edge_id(e.u, e.v);
      if (c4_edges.test(id)) disjoint_from_c4 = false;
      if (!excluded.test(id)) candidates.push_back(id);
    }
    if (candidates.empty()) return;
    if (disjoint_from_c4 && size + alive + 1 > limit_) return;

    EdgeMask local_excluded = excluded;
    for (EdgeId id : candidates) {
      chosen.set(id);
      branch(chosen, local_excluded, size + 1);
      chosen.reset(id);
      if (done_) return;
      local_excluded.set(id);
      // The remaining branches cannot beat the limit if even one more edge is
      // too many.
      if (size + 1 > limit_) return;
    }
  }

  const Graph& g_;
  const PerfectMatching& m_;
  std::vector<Alternating4Cycle> four_cycles_;
  std::optional<EdgeMask> best_;
  std::size_t limit_ = 0;
  std::size_t nodes_ = 0;
  bool stop_at_first_ = false;
  bool done_ = false;
};

inline EdgeSet initial_incumbent(const Graph& g, const PerfectMatching& m) {
  if (is_nice(g, m)) return omega_antiforcing_set(g, m);
  std::vector<Edge> rest;
  for (auto e : g.edges()) {
    if (!m.contains(e)) rest.push_back(e);
  }
  return minimalize_antiforcing_set(g, m, EdgeSet(std::move(rest)));
}

// af value only; returns (value, witness mask, nodes).
inline std::pair<std::size_t, EdgeMask> solve_value(AntiforcingSearch& search, const Graph& g,
                                                    const PerfectMatching& m) {
  EdgeSet incumbent = initial_incumbent(g, m);
  EdgeMask best = edge_mask(g, incumbent);
  if (!incumbent.empty()) {
    EdgeMask none(g.edge_count());
    if (auto better = search.minimize(none, none, incumbent.size() - 1, false)) best = *better;
  }
  return {best.count(), best};
}

}  // namespace detail

/// Exact af(G, M) with the lexicographically least minimum witness.
inline AfResult min_antiforcing(const Graph& g, const PerfectMatching& m) {
  require_perfect_matching(g, m, "min_antiforcing");
  detail::AntiforcingSearch search(g, m);
  auto [value, best] = detail::solve_value(search, g, m);

  // Fix the witness edge by edge in ascending order: accept an edge whenever
  // some optimum still exists containing the accepted edges plus it and no
  // rejected edge.
  const EdgeMask in_m = matching_mask(g, m);
  EdgeMask forced(g.edge_count());
  EdgeMask rejected(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count() && forced.count() < value; ++id) {
    if (in_m.test(id)) continue;
    EdgeMask trial = forced;
    trial.set(id);
    if (search.minimize(trial, rejected, value, true)) {
      forced = trial;
    } else {
      rejected.set(id);
    }
  }
  if (forced.count() != value || has_alternating_cycle(g, m, forced)) {
    throw std::logic_error("min_antiforcing: tie resolution lost the optimum");
  }

  AfResult r;
  r.value = value;
  r.witness = edge_set(g, forced);
  r.lower_bound_c4 = alternating_4cycles(g, m).size();
  r.nodes_explored = search.nodes();
  return r;
}

/// af(G, M) without the lexicographic witness pass.
inline std::size_t antiforcing_number(const Graph& g, const PerfectMatching& m) {
  require_perfect_matching(g, m, "antiforcing_number");
  detail::AntiforcingSearch search(g, m);
  return detail::solve_value(search, g, m).first;
}

struct MaxAfResult {
  std::size_t value = 0;
  PerfectMatching argmax;  // first maximiser in canonical matching order
  std::size_t matchings = 0;
};

/// Af(G): maximum of af over every perfect matching. Matchings are split
/// round-robin over `threads` workers; the reported maximiser does not depend
/// on the thread count.
inline MaxAfResult max_antiforcing(const Graph& g, unsigned threads = 1) {
  auto pms = enumerate_perfect_matchings(g);
  if (pms.empty()) throw NoPerfectMatching("max_antiforcing: graph has no perfect matching");
  std::vector<std::size_t> values(pms.size(), 0);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pms.size())));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < pms.size(); i += threads) values[i] = antiforcing_number(g, pms[i]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  auto it = std::max_element(values.begin(), values.end());
  MaxAfResult r;
  r.value = *it;
  r.argmax = pms[static_cast<std::size_t>(it - values.begin())];
  r.matchings = pms.size();
  return r;
}

}  // namespace antiforce
