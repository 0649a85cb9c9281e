#pragma once

// Building graphs with nice perfect matchings from K2 by two expansions:
//   op_i:  add two absent edges closing a 4-cycle with two M-edges;
//   op_ii: join two such graphs by a matching-compatible bijection between
//          the endpoints of chosen M-edge subsets (empty subsets give the
//          disjoint union).
// A trace records the steps; replaying it rebuilds the graph exactly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antiforce/generators.hpp"
#include "antiforce/matching.hpp"
#include "antiforce/nice.hpp"

namespace antiforce {

enum class StepKind { seed, op_i, op_ii, relabel };
enum class PairingChoice { parallel, crossed };

/// One step of a trace. Ids refer to the graph built so far.
///   op_i:   e1 = (u1,v1), e2 = (u2,v2) in M; parallel adds u1u2, v1v2,
///           crossed adds u1v2, v1u2.
///   op_ii:  `right` is the trace of the second operand; `join` holds pairs
///           (u, w) with u a left id and w a right id before shifting.
///   relabel: built vertex k becomes labels[k].
struct ExpansionStep {
  StepKind kind = StepKind::seed;
  Edge e1{};
  Edge e2{};
  PairingChoice choice = PairingChoice::parallel;
  std::vector<ExpansionStep> right;
  std::vector<std::pair<Vertex, Vertex>> join;
  std::vector<Vertex> labels;

  friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

struct ExtremalGraph {
  Graph graph;
  PerfectMatching matching;
};

struct ConstructionTrace {
  std::vector<ExpansionStep> steps;
  Graph graph;
  PerfectMatching matching;

  /// Steps other than the final relabel.
  std::size_t expansion_count() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += s.kind != StepKind::relabel;
    return n;
  }
};

inline ExtremalGraph k2() { return {complete_graph(2), PerfectMatching({1, 0})}; }

namespace detail {

inline void require_nice(const Graph& g, const PerfectMatching& m, const char* who) {
  require_perfect_matching(g, m, who);
  if (!is_nice(g, m)) throw NotNice(std::string(who) + ": matching is not nice");
}

inline void assert_nice(const Graph& g, const PerfectMatching& m, const char* who) {
  if (!is_nice(g, m)) throw std::logic_error(std::string(who) + ": result lost niceness");
}

inline std::pair<Edge, Edge> op_i_edges(Edge e1, Edge e2, PairingChoice choice) {
  if (choice == PairingChoice::parallel) return {make_edge(e1.u, e2.u), make_edge(e1.v, e2.v)};
  return {make_edge(e1.u, e2.v), make_edge(e1.v, e2.u)};
}

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.edge_count() + 2);
  for (auto [u, v] : g.edges()) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace detail

/// Whether op_i with these arguments is applicable: both M-edges distinct and
/// in M, and both new edges absent.
inline bool op_i_applicable(const Graph& g, const PerfectMatching& m, Edge e1, Edge e2,
                            PairingChoice choice) {
  if (e1.u >= e1.v || e2.u >= e2.v || e1.v >= g.vertex_count() || e2.v >= g.vertex_count())
    return false;
  if (e1 == e2 || !m.contains(e1) || !m.contains(e2)) return false;
  auto [a, b] = detail::op_i_edges(e1, e2, choice);
  return !g.has_edge(a) && !g.has_edge(b);
}

inline ExtremalGraph expand_i(const Graph& g, const PerfectMatching& m, Edge e1, Edge e2,
                              PairingChoice choice) {
  detail::require_nice(g, m, "expand_i");
  e1 = make_edge(e1.u, e1.v);
  e2 = make_edge(e2.u, e2.v);
  if (e1 == e2 || !m.contains(e1) || !m.contains(e2)) {
    throw InvalidInput("expand_i: e1 and e2 must be distinct edges of M");
  }
  auto [a, b] = detail::op_i_edges(e1, e2, choice);
  if (g.has_edge(a) || g.has_edge(b)) throw InvalidInput("expand_i: new edge already present");
  auto pairs = detail::edge_pairs(g);
  pairs.emplace_back(a.u, a.v);
  pairs.emplace_back(b.u, b.v);
  Graph out(g.vertex_count(), pairs);
  detail::assert_nice(out, m, "expand_i");
  return {std::move(out), m};
}

/// Join over phi = {(u, w)}: u ranges over V(M1') in G1, w over V(M2') in G2.
/// G2's vertex w becomes v(G1) + w. Throws InvalidInput unless phi is a
/// bijection between unions of M-edges carrying M1-edges onto M2-edges.
inline ExtremalGraph expand_ii(const Graph& g1, const PerfectMatching& m1, const Graph& g2,
                               const PerfectMatching& m2,
                               std::span<const std::pair<Vertex, Vertex>> phi) {
  detail::require_nice(g1, m1, "expand_ii");
  detail::require_nice(g2, m2, "expand_ii");
  const Vertex n1 = static_cast<Vertex>(g1.vertex_count());
  const Vertex n2 = static_cast<Vertex>(g2.vertex_count());
  constexpr Vertex kNone = InducedSubgraph::kNoVertex;
  std::vector<Vertex> image(n1, kNone);
  std::vector<bool> hit(n2, false);
  for (auto [u, w] : phi) {
    if (u >= n1 || w >= n2 || image[u] != kNone || hit[w]) {
      throw InvalidInput("expand_ii: phi is not an injective map on vertex ids");
    }
    image[u] = w;
    hit[w] = true;
  }
  for (auto [u, w] : phi) {
    if (image[m1.partner(u)] != m2.partner(w)) {
      throw InvalidInput("expand_ii: phi does not carry M1' onto M2'");
    }
  }
  auto pairs = detail::edge_pairs(g1);
  for (auto [u, v] : g2.edges()) pairs.emplace_back(n1 + u, n1 + v);
  for (auto [u, w] : phi) pairs.emplace_back(u, n1 + w);
  std::vector<Vertex> partner(n1 + n2);
  for (Vertex v = 0; v < n1; ++v) partner[v] = m1.partner(v);
  for (Vertex v = 0; v < n2; ++v) partner[n1 + v] = n1 + m2.partner(v);
  Graph out(n1 + n2, pairs);
  PerfectMatching m(std::move(partner));
  detail::assert_nice(out, m, "expand_ii");
  return {std::move(out), std::move(m)};
}

inline ExtremalGraph expand_ii(const Graph& g1, const PerfectMatching& m1, const Graph& g2,
                               const PerfectMatching& m2,
                               const std::vector<std::pair<Vertex, Vertex>>& phi) {
  return expand_ii(g1, m1, g2, m2, std::span<const std::pair<Vertex, Vertex>>(phi));
}

/// Renames vertex k to labels[k].
inline ExtremalGraph relabel(const Graph& g, const PerfectMatching& m,
                             const std::vector<Vertex>& labels) {
  const auto n = g.vertex_count();
  std::vector<bool> hit(n, false);
  if (labels.size() != n) throw InvalidInput("relabel: label count differs from vertex count");
  for (Vertex l : labels) {
    if (l >= n || hit[l]) throw InvalidInput("relabel: labels are not a permutation");
    hit[l] = true;
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [u, v] : g.edges()) pairs.emplace_back(labels[u], labels[v]);
  return {Graph(n, pairs), apply_permutation(labels, m)};
}

/// Rebuilds the graph and matching a step list describes.
inline ExtremalGraph replay(std::span<const ExpansionStep> steps) {
  if (steps.empty() || steps.front().kind != StepKind::seed) {
    throw InvalidInput("replay: a trace starts with a seed step");
  }
  ExtremalGraph cur = k2();
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const auto& s = steps[i];
    switch (s.kind) {
      case StepKind::seed:
        throw InvalidInput("replay: seed step after the start");
      case StepKind::op_i:
        cur = expand_i(cur.graph, cur.matching, s.e1, s.e2, s.choice);
        break;
      case StepKind::op_ii: {
        auto rhs = replay(s.right);
        cur = expand_ii(cur.graph, cur.matching, rhs.graph, rhs.matching, s.join);
        break;
      }
      case StepKind::relabel:
        cur = relabel(cur.graph, cur.matching, s.labels);
        break;
    }
  }
  return cur;
}

inline ExtremalGraph replay(const std::vector<ExpansionStep>& steps) {
  return replay(std::span<const ExpansionStep>(steps));
}

namespace detail {

inline ExpansionStep seed_step() { return ExpansionStep{}; }

inline ExpansionStep op_i_step(Edge e1, Edge e2, PairingChoice c) {
  ExpansionStep s;
  s.kind = StepKind::op_i;
  s.e1 = e1;
  s.e2 = e2;
  s.choice = c;
  return s;
}

inline ExpansionStep op_ii_step(std::vector<ExpansionStep> right,
                                std::vector<std::pair<Vertex, Vertex>> join) {
  ExpansionStep s;
  s.kind = StepKind::op_ii;
  s.right = std::move(right);
  s.join = std::move(join);
  return s;
}

// Uniform index below n from the raw engine output, so traces do not depend on
// the standard library's distribution implementations.
inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace detail

/// Seeded random trace. Each step picks op_i or op_ii with equal probability
/// when both apply; op_i draws uniformly from the applicable (e1, e2, choice)
/// triples, op_ii joins either a fresh K2 or an earlier state of this trace
/// (equally likely) over a random number of M-edges. Graphs never exceed
/// `max_vertices`; when nothing applies under the cap the trace ends early.
inline ConstructionTrace random_extremal(std::uint64_t seed, std::size_t steps,
                                         std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  ConstructionTrace t{{detail::seed_step()}, complete_graph(2), PerfectMatching({1, 0})};
  // Lengths of step prefixes that are valid right operands, with sizes.
  std::vector<std::pair<std::size_t, std::size_t>> snapshots{{1, 2}};

  for (std::size_t step = 0; step < steps; ++step) {
    const auto& g = t.graph;
    const auto me = t.matching.edges();
    std::vector<ExpansionStep> op_i;
    for (std::size_t a = 0; a < me.size(); ++a)
      for (std::size_t b = a + 1; b < me.size(); ++b)
        for (auto c : {PairingChoice::parallel, PairingChoice::crossed})
          if (op_i_applicable(g, t.matching, me[a], me[b], c))
            op_i.push_back(detail::op_i_step(me[a], me[b], c));

    const std::size_t room = max_vertices > g.vertex_count() ? max_vertices - g.vertex_count() : 0;
    std::vector<std::pair<std::size_t, std::size_t>> fits;
    for (auto snap : snapshots)
      if (snap.second <= room) fits.push_back(snap);

    if (op_i.empty() && fits.empty()) break;
    const bool use_i = fits.empty() || (!op_i.empty() && detail::below(rng, 2) == 0);
    if (use_i) {
      const auto& s = op_i[detail::below(rng, op_i.size())];
      auto next = expand_i(g, t.matching, s.e1, s.e2, s.choice);
      t.graph = std::move(next.graph);
      t.steps.push_back(s);
    } else {
      // fits.front() is always the lone seed (a fresh K2).
      auto snap = detail::below(rng, 2) == 0 ? fits.front() : fits[detail::below(rng, fits.size())];
      std::vector<ExpansionStep> right(t.steps.begin(),
                                       t.steps.begin() + static_cast<std::ptrdiff_t>(snap.first));
      auto rhs = replay(right);
      auto m2 = rhs.matching.edges();
      std::vector<Edge> m1 = me;
      const std::size_t k = detail::below(rng, std::min(m1.size(), m2.size()) + 1);
      std::shuffle(m1.begin(), m1.end(), rng);
      std::shuffle(m2.begin(), m2.end(), rng);
      std::vector<std::pair<Vertex, Vertex>> join;
      for (std::size_t i = 0; i < k; ++i) {
        auto [x, y] = m1[i];
        auto [u, v] = m2[i];
        if (detail::below(rng, 2) == 0) std::swap(u, v);
        join.emplace_back(x, u);
        join.emplace_back(y, v);
      }
      std::sort(join.begin(), join.end());
      auto next = expand_ii(g, t.matching, rhs.graph, rhs.matching, join);
      t.graph = std::move(next.graph);
      t.matching = std::move(next.matching);
      t.steps.push_back(detail::op_ii_step(std::move(right), std::move(join)));
    }
    snapshots.emplace_back(t.steps.size(), t.graph.vertex_count());
  }
  return t;
}

/// A trace rebuilding (g, m) from K2. M-edges e_1 < ... < e_n are added in
/// ascending order, so peeling runs in descending order. Each e_j joins the
/// graph built on e_1..e_{j-1} as a fresh K2: over the least adjacent e_i if
/// there is one, otherwise as a disjoint union; op_i steps then add its other
/// edges in pairs. A final relabel appears when built ids differ from g's.
inline ConstructionTrace decompose(const Graph& g, const PerfectMatching& m) {
  detail::require_nice(g, m, "decompose");
  const auto me = m.edges();
  ConstructionTrace t{{}, g, m};
  if (me.empty()) throw InvalidInput("decompose: empty graph");
  t.steps.push_back(detail::seed_step());
  // Built vertex 2j is u_j and 2j+1 is v_j, so orientation is preserved.
  auto built = [](std::size_t j, bool second) { return static_cast<Vertex>(2 * j + second); };

  for (std::size_t n = 1; n < me.size(); ++n) {
    const auto [un, vn] = me[n];
    std::vector<std::pair<Vertex, Vertex>> join;
    std::vector<ExpansionStep> extra;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [ui, vi] = me[i];
      const bool par = g.adjacent(ui, un);
      const bool crs = g.adjacent(ui, vn);
      if (join.empty() && (par || crs)) {
        // Right operand is K2 on (u_n, v_n) with ids 0, 1.
        if (par) {
          join = {{built(i, false), 0}, {built(i, true), 1}};
          if (crs)
            extra.push_back(detail::op_i_step({built(i, false), built(i, true)},
                                              {built(n, false), built(n, true)},
                                              PairingChoice::crossed));
        } else {
          join = {{built(i, false), 1}, {built(i, true), 0}};
        }
        continue;
      }
      for (auto c : {PairingChoice::parallel, PairingChoice::crossed}) {
        if (g.adjacent(ui, c == PairingChoice::parallel ? un : vn)) {
          extra.push_back(detail::op_i_step({built(i, false), built(i, true)},
                                            {built(n, false), built(n, true)}, c));
        }
      }
    }
    t.steps.push_back(detail::op_ii_step({detail::seed_step()}, std::move(join)));
    for (auto& s : extra) t.steps.push_back(std::move(s));
  }

  std::vector<Vertex> labels(g.vertex_count());
  bool identity = true;
  for (std::size_t j = 0; j < me.size(); ++j) {
    labels[2 * j] = me[j].u;
    labels[2 * j + 1] = me[j].v;
    identity = identity && me[j].u == 2 * j && me[j].v == 2 * j + 1;
  }
  if (!identity) {
    ExpansionStep s;
    s.kind = StepKind::relabel;
    s.labels = std::move(labels);
    t.steps.push_back(std::move(s));
  }
  return t;
}

/// Every edge lies in some perfect matching.
inline bool is_one_extendable(const Graph& g) {
  for (auto e : g.edges()) {
    if (!pm_containing_edge(g, e)) return false;
  }
  return true;
}

/// Random graph on n vertices (n even) containing the planted perfect matching
/// {0 1, 2 3, ...} after a seeded shuffle of ids; every other pair is an edge
/// with probability p.
inline Graph random_graph_with_pm(std::uint64_t seed, std::size_t n, double p) {
  if (n % 2 != 0) throw InvalidInput("random_graph_with_pm: n must be even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; i += 2) pairs.emplace_back(perm[i], perm[i + 1]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() < threshold) pairs.emplace_back(u, v);
  return Graph(n, pairs);
}

/// Connected bipartite graph with parts {0..h-1}, {h..2h-1} (h = n/2): the
/// planted matching i ~ h+i, the path 0 ~ h+1 ~ 1 ~ h+2 ~ ... tying the
/// matching edges together, and each remaining cross pair with probability p.
inline Graph random_connected_bipartite_with_pm(std::uint64_t seed, std::size_t n, double p) {
  if (n % 2 != 0 || n == 0) throw InvalidInput("random_connected_bipartite_with_pm: n must be even");
  std::mt19937_64 rng(seed);
  const auto h = static_cast<Vertex>(n / 2);
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < h; ++i) pairs.emplace_back(i, h + i);
  for (Vertex i = 0; i + 1 < h; ++i) pairs.emplace_back(i, h + i + 1);
  for (Vertex x = 0; x < h; ++x)
    for (Vertex y = 0; y < h; ++y)
      if (rng() < threshold) pairs.emplace_back(x, h + y);
  return Graph(n, pairs);
}

}  // namespace antiforce
