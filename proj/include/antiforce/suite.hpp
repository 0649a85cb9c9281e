#pragma once

// The `verify` suite: recomputes the reference values of the library's named
// families and reports each as a check. Tiers by largest cube dimension:
//   3  small graphs only (well under a second);
//   4  adds dimension-4 cubes, Q_{4,1} and its certificates (seconds);
//   5  adds nice-matching counts and primality at dimension 5 only.

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "antiforce/antiforcing.hpp"
#include "antiforce/construction.hpp"
#include "antiforce/generators.hpp"
#include "antiforce/nice.hpp"
#include "antiforce/products.hpp"
#include "antiforce/report.hpp"

namespace antiforce {

struct SuiteOptions {
  int max_dim = 4;
  std::uint64_t seed = 0;
  bool timings = false;
  unsigned threads = 1;
  std::size_t random_traces = 1000;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph triangle_with_pendant() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

/// The graphs the product checks draw factors from.
inline std::vector<NamedGraph> product_corpus() {
  return {{"K2", complete_graph(2)},
          {"C4", cycle_graph(4)},
          {"K4", complete_graph(4)},
          {"K3,3", complete_bipartite_graph(3, 3)},
          {"Q3", hypercube(3).graph}};
}

namespace detail {

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteOptions& opt) : opt_(opt) { report_.seed = opt.seed; }

  void check(std::string name, std::string inputs, std::string expected,
             const std::function<std::string()>& compute) {
    auto start = std::chrono::steady_clock::now();
    std::string actual;
    try {
      actual = compute();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    const bool pass = actual == expected;
    report_.checks.push_back({std::move(name), std::move(inputs), std::move(expected),
                              std::move(actual), pass, opt_.timings ? ms : 0});
  }

  Report take() { return std::move(report_); }

 private:
  SuiteOptions opt_;
  Report report_;
};

inline std::string yes(bool b) { return b ? "true" : "false"; }

// Every matching sits between the 4-cycle count and both upper bounds.
inline std::string sandwich(const Graph& g) {
  const auto b = bounds(g);
  const auto twice_e_minus_v =
      2 * static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count());
  for (const auto& m : enumerate_perfect_matchings(g)) {
    const auto af = static_cast<std::int64_t>(antiforcing_number(g, m));
    const auto c4 = static_cast<std::int64_t>(count_alternating_4cycles(g, m));
    if (c4 > af || 4 * af > twice_e_minus_v || af > b.cyclomatic) {
      return "violated: af " + std::to_string(af);
    }
  }
  return "true";
}

inline std::string all_nice(const Graph& g) {
  auto pms = enumerate_perfect_matchings(g);
  std::size_t nice = 0;
  for (const auto& m : pms) nice += is_nice(g, m);
  return std::to_string(nice) + "/" + std::to_string(pms.size());
}

inline std::string round_trips(const Graph& g) {
  const auto set = enumerate_nice(g);
  for (const auto& m : set.matchings) {
    auto inv = involution_of(g, m);
    if (!(matching_of(g, inv) == m)) return "false";
  }
  for (const auto& inv : enumerate_involutions(g)) {
    if (!(involution_of(g, matching_of(g, inv)) == inv)) return "false";
  }
  return "true";
}

// Lifts of the factors' nice sets, compared with the product's own set.
inline std::string lifts_exhaust(const ProductGraph& p) {
  std::vector<PerfectMatching> lifted;
  for (const auto& m : enumerate_nice(p.first).matchings) lifted.push_back(rho_lift(p, m));
  for (const auto& m : enumerate_nice(p.second).matchings) lifted.push_back(sigma_lift(p, m));
  std::sort(lifted.begin(), lifted.end());
  return yes(lifted == enumerate_nice(p.graph).matchings);
}

// Two-sided certificate: 4-cycle lower bound and an omega set of equal size.
inline std::string certificate(const Graph& g, const PerfectMatching& m) {
  const auto lower = count_alternating_4cycles(g, m);
  const auto upper = omega_antiforcing_set(g, m);
  if (!has_unique_pm(g, m, upper) || upper.size() != lower) {
    return "gap " + std::to_string(lower) + ".." + std::to_string(upper.size());
  }
  return std::to_string(lower);
}

inline PerfectMatching class_matching(const GeneratedGraph& gg, int cls) {
  const auto& es = gg.classes.at(cls);
  return PerfectMatching::from_edges(gg.graph.vertex_count(), es.edges());
}

/// FQ3 grown from Q3 with E1 by op_i over every antipodal pair of E1-edges.
inline ConstructionTrace fq3_from_q3() {
  auto q3 = hypercube(3);
  auto m = class_matching(q3, 1);
  auto t = decompose(q3.graph, m);
  Graph g = q3.graph;
  for (auto e : m.edges()) {
    const Edge far{e.u ^ 7u, e.v ^ 7u};
    const Edge other = make_edge(far.u, far.v);
    if (!(e < other)) continue;
    // e = (x, x+1) and its complement pair: x ~ ~x, x+1 ~ ~(x+1).
    const auto choice = (e.u ^ 7u) == other.u ? PairingChoice::parallel : PairingChoice::crossed;
    g = expand_i(g, m, e, other, choice).graph;
    t.steps.push_back(op_i_step(e, other, choice));
  }
  t.graph = g;
  return t;
}

}  // namespace detail

inline Report run_suite(const SuiteOptions& opt) {
  if (opt.max_dim < 3 || opt.max_dim > 5) throw InvalidInput("verify: --max-dim must be 3, 4 or 5");
  using detail::yes;
  detail::SuiteRunner run(opt);
  const int d = opt.max_dim;
  auto count_str = [](std::size_t n) { return std::to_string(n); };

  // Bound sanity over every perfect matching.
  const std::vector<NamedGraph> small{{"K2", complete_graph(2)},
                                      {"C4", cycle_graph(4)},
                                      {"K4", complete_graph(4)},
                                      {"C6", cycle_graph(6)},
                                      {"K3,3", complete_bipartite_graph(3, 3)},
                                      {"K4,4", complete_bipartite_graph(4, 4)},
                                      {"Q3", hypercube(3).graph},
                                      {"triangle+pendant", triangle_with_pendant()}};
  for (const auto& [name, g] : small) {
    run.check("bounds/" + name, name, "true", [&, &g = g] { return detail::sandwich(g); });
  }

  // Complete and complete bipartite graphs.
  for (int n : {2, 3}) {
    const auto g = complete_graph(2 * n);
    const std::string name = "K" + std::to_string(2 * n);
    run.check("max_af/" + name, name, count_str(n * n - n),
              [&] { return count_str(max_antiforcing(g, opt.threads).value); });
    run.check("all_nice/" + name, name, n == 2 ? "3/3" : "15/15", [&] { return detail::all_nice(g); });
  }
  for (int m : {2, 3, 4}) {
    const auto g = complete_bipartite_graph(m, m);
    const std::string name = "K" + std::to_string(m) + "," + std::to_string(m);
    const std::size_t fact = m == 2 ? 2 : m == 3 ? 6 : 24;
    run.check("max_af/" + name, name, count_str((m * m - m) / 2),
              [&] { return count_str(max_antiforcing(g, opt.threads).value); });
    run.check("nice_count/" + name, name, count_str(fact),
              [&] { return count_str(enumerate_nice(g).count()); });
    run.check("all_nice/" + name, name, count_str(fact) + "/" + count_str(fact),
              [&] { return detail::all_nice(g); });
  }

  // Hypercubes.
  const auto q3 = hypercube(3);
  run.check("af/Q3,E1", "Q3 E1", "4",
            [&] { return count_str(min_antiforcing(q3.graph, detail::class_matching(q3, 1)).value); });
  run.check("max_af/Q3", "Q3", "4", [&] { return count_str(max_antiforcing(q3.graph, opt.threads).value); });
  if (d >= 4) {
    const auto q4 = hypercube(4);
    run.check("af_certificate/Q4,E1", "Q4 E1", "12",
              [&] { return detail::certificate(q4.graph, detail::class_matching(q4, 1)); });
  }

  // Nice counts and the involution correspondence.
  std::vector<std::pair<NamedGraph, std::size_t>> nice_targets;
  for (int n = 2; n <= d; ++n) nice_targets.push_back({{"Q" + std::to_string(n), hypercube(n).graph}, n});
  nice_targets.push_back({{"FQ2", folded_hypercube(2).graph}, 3});
  nice_targets.push_back({{"FQ3", folded_hypercube(3).graph}, 24});
  for (int n = 4; n <= d; ++n) {
    nice_targets.push_back({{"FQ" + std::to_string(n), folded_hypercube(n).graph}, n + 1});
  }
  for (const auto& [ng, expected] : nice_targets) {
    const auto& g = ng.graph;
    run.check("nice_count/" + ng.name, ng.name, count_str(expected),
              [&] { return count_str(enumerate_nice(g).count()); });
    if (g.vertex_count() <= 16) {
      run.check("involutions/" + ng.name, ng.name, count_str(expected),
                [&] { return count_str(enumerate_involutions(g).size()); });
      run.check("round_trip/" + ng.name, ng.name, "true", [&] { return detail::round_trips(g); });
    }
  }

  // Additivity over products of at most 32 vertices (16 at the smallest tier).
  const auto corpus = product_corpus();
  const std::size_t product_cap = d >= 4 ? 32 : 16;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto& a = corpus[i];
      const auto& b = corpus[j];
      if (a.graph.vertex_count() * b.graph.vertex_count() > product_cap) continue;
      const std::string name = a.name + "x" + b.name;
      const auto p = cartesian_product(a.graph, b.graph);
      run.check("additivity/" + name, name,
                count_str(enumerate_nice(a.graph).count() + enumerate_nice(b.graph).count()),
                [&] { return count_str(enumerate_nice(p.graph).count()); });
      run.check("lifts/" + name, name, "true", [&] { return detail::lifts_exhaust(p); });
    }
  }

  // Enhanced hypercube Q_{4,1}.
  if (d >= 4) {
    const auto q41 = enhanced_hypercube(4, 1);
    const auto fq3k2 = cartesian_product(folded_hypercube(3).graph, complete_graph(2));
    run.check("isomorphic/Q4,1~FQ3xK2", "Q4,1 FQ3xK2", "true",
              [&] { return yes(is_isomorphic(q41.graph, fq3k2.graph).has_value()); });
    const auto nice = enumerate_nice(q41.graph);
    run.check("nice_count/Q4,1", "Q4,1", "25", [&] { return count_str(nice.count()); });
    run.check("nice_classes/Q4,1", "Q4,1", "2",
              [&] { return count_str(equivalence_classes(q41.graph, nice).size()); });
    run.check("af_certificate/Q4,1", "Q4,1 E1", "16",
              [&] { return detail::certificate(q41.graph, detail::class_matching(q41, 1)); });
  }

  // Closure classes and primality.
  run.check("theta_classes/C6", "C6", "3", [] { return std::to_string(theta_partition(cycle_graph(6)).class_count); });
  run.check("theta_classes/Q3", "Q3", "E1,E2,E3", [&] {
    auto classes = theta_partition(q3.graph).classes(q3.graph);
    std::string out;
    for (const auto& c : classes) {
      std::string label = "?";
      for (const auto& [id, es] : q3.classes)
        if (es == c) label = "E" + std::to_string(id);
      out += (out.empty() ? "" : ",") + label;
    }
    return out;
  });
  for (int n = 4; n <= d; ++n) {
    const std::string name = "FQ" + std::to_string(n);
    run.check("prime/" + name, name, "prime", [n] {
      return prime_by_theta(folded_hypercube(n).graph) == Primality::prime ? "prime" : "inconclusive";
    });
  }

  // Construction.
  run.check("random_traces_nice", "seed " + std::to_string(opt.seed), "true", [&] {
    for (std::size_t i = 0; i < opt.random_traces; ++i) {
      auto t = random_extremal(opt.seed * 1000003u + i, 10, 14);
      auto r = replay(t.steps);
      if (!(r.graph == t.graph) || !is_nice(t.graph, t.matching)) return std::string("false");
      if (t.graph.vertex_count() >= 4 && is_connected(t.graph) && !is_one_extendable(t.graph))
        return std::string("false");
    }
    return std::string("true");
  });
  std::vector<std::pair<std::string, std::pair<Graph, PerfectMatching>>> rebuild;
  rebuild.push_back({"C4", {cycle_graph(4), PerfectMatching({1, 0, 3, 2})}});
  rebuild.push_back({"K4", {complete_graph(4), PerfectMatching({1, 0, 3, 2})}});
  rebuild.push_back({"Q3", {q3.graph, detail::class_matching(q3, 1)}});
  {
    auto t = detail::fq3_from_q3();
    rebuild.push_back({"FQ3-from-Q3", {t.graph, t.matching}});
  }
  for (const auto& [name, gm] : rebuild) {
    const auto& [g, m] = gm;
    run.check("decompose_replay/" + name, name, "true",
              [&] { return yes(replay(decompose(g, m).steps).graph == g); });
  }
  return run.take();
}

}  // namespace antiforce
