#include <gtest/gtest.h>

#include "antiforce/generators.hpp"
#include "antiforce/isomorphism.hpp"
#include "antiforce/nice.hpp"
#include "antiforce/products.hpp"
#include "antiforce/suite.hpp"
#include "support/oracles.hpp"

using namespace antiforce;

TEST(Product, AdjacencyRule) {
  auto g1 = path_graph(3);
  auto g2 = cycle_graph(4);
  auto p = cartesian_product(g1, g2);
  EXPECT_EQ(p.graph.vertex_count(), 12u);
  EXPECT_EQ(p.graph.edge_count(), g1.edge_count() * 4 + 3 * g2.edge_count());
  for (Vertex a = 0; a < 12; ++a) {
    for (Vertex b = 0; b < 12; ++b) {
      auto [x, u] = p.coords(a);
      auto [y, v] = p.coords(b);
      const bool expected = (g1.adjacent(x, y) && u == v) || (x == y && g2.adjacent(u, v));
      EXPECT_EQ(p.graph.adjacent(a, b), expected);
    }
  }
  EXPECT_EQ(p.id(2, 3), 11u);
  EXPECT_EQ(p.coords(11), (std::pair<Vertex, Vertex>{2, 3}));
}

TEST(Product, HypercubeIsPowerOfK2) {
  auto k2 = complete_graph(2);
  auto q2 = cartesian_product(k2, k2).graph;
  EXPECT_TRUE(is_isomorphic(q2, cycle_graph(4)));
  auto q3 = cartesian_product(q2, k2).graph;
  EXPECT_TRUE(is_isomorphic(q3, hypercube(3).graph));
  EXPECT_EQ(enumerate_nice(q3).count(), 3 * enumerate_nice(k2).count());
}

TEST(Product, EnhancedCubeIsFoldedCubeTimesK2) {
  auto p = cartesian_product(folded_hypercube(3).graph, complete_graph(2));
  auto phi = is_isomorphic(enhanced_hypercube(4, 1).graph, p.graph);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->size(), 16u);
}

TEST(Layer, EqualsFactor) {
  auto p = cartesian_product(complete_graph(4), cycle_graph(6));
  for (Vertex anchor = 0; anchor < p.graph.vertex_count(); anchor += 5) {
    auto l1 = layer(p, Factor::first, anchor);
    auto l2 = layer(p, Factor::second, anchor);
    EXPECT_EQ(l1.graph, complete_graph(4));
    EXPECT_EQ(l2.graph, cycle_graph(6));
    EXPECT_NE(std::find(l1.vertices.begin(), l1.vertices.end(), anchor), l1.vertices.end());
    EXPECT_NE(std::find(l2.vertices.begin(), l2.vertices.end(), anchor), l2.vertices.end());
  }
  EXPECT_THROW(layer(p, Factor::first, 24), InvalidInput);
}

TEST(Lifts, AdditivityAndExhaustion) {
  auto corpus = product_corpus();
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      if (a.graph.vertex_count() * b.graph.vertex_count() > 32) continue;
      auto p = cartesian_product(a.graph, b.graph);
      auto n1 = enumerate_nice(a.graph);
      auto n2 = enumerate_nice(b.graph);
      auto np = enumerate_nice(p.graph);
      EXPECT_EQ(np.count(), n1.count() + n2.count()) << a.name << " x " << b.name;
      std::vector<PerfectMatching> lifted;
      for (const auto& m : n1.matchings) lifted.push_back(rho_lift(p, m));
      for (const auto& m : n2.matchings) lifted.push_back(sigma_lift(p, m));
      for (const auto& m : lifted) EXPECT_TRUE(is_nice(p.graph, m));
      std::sort(lifted.begin(), lifted.end());
      EXPECT_EQ(lifted, np.matchings) << a.name << " x " << b.name;
    }
  }
}

TEST(Lifts, ProductIsExtremalIffAFactorIs) {
  std::vector<NamedGraph> corpus = product_corpus();
  corpus.push_back({"C6", cycle_graph(6)});
  corpus.push_back({"P4", path_graph(4)});
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      if (a.graph.vertex_count() * b.graph.vertex_count() > 24) continue;
      auto p = cartesian_product(a.graph, b.graph);
      const bool factor = enumerate_nice(a.graph).count() > 0 || enumerate_nice(b.graph).count() > 0;
      EXPECT_EQ(enumerate_nice(p.graph).count() > 0, factor) << a.name << " x " << b.name;
    }
  }
}

TEST(Theta, AgreesWithLabelPropagation) {
  std::vector<Graph> corpus{cycle_graph(6),           cycle_graph(7),  hypercube(3).graph,
                            folded_hypercube(3).graph, complete_graph(5), complete_bipartite_graph(3, 4),
                            path_graph(5),             enhanced_hypercube(4, 1).graph};
  corpus.push_back(cartesian_product(cycle_graph(6), path_graph(3)).graph);
  for (const auto& g : corpus) {
    auto t = theta_partition(g);
    auto labels = oracle::theta_labels(g);
    ASSERT_EQ(t.class_of.size(), labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < labels.size(); ++b)
        EXPECT_EQ(t.class_of[a] == t.class_of[b], labels[a] == labels[b]);
    EXPECT_EQ(t.class_count, oracle::theta_class_count(g));
    EXPECT_EQ(t.witnesses.size(), g.edge_count() - t.class_count);
  }
}

TEST(Theta, WitnessesRecordDistances) {
  auto g = hypercube(3).graph;
  auto d = oracle::distances(g);
  auto t = theta_partition(g);
  for (const auto& w : t.witnesses) {
    auto [x, y] = g.edge(w.a);
    auto [u, v] = g.edge(w.b);
    EXPECT_EQ(w.distances[0], d[x][u]);
    EXPECT_EQ(w.distances[1], d[y][v]);
    EXPECT_EQ(w.distances[2], d[x][v]);
    EXPECT_EQ(w.distances[3], d[y][u]);
    EXPECT_NE(w.distances[0] + w.distances[1], w.distances[2] + w.distances[3]);
  }
}

TEST(Theta, NamedPartitions) {
  auto c6 = theta_partition(cycle_graph(6));
  EXPECT_EQ(c6.class_count, 3u);
  // Antipodal edges pair up.
  for (const auto& cls : c6.classes(cycle_graph(6))) EXPECT_EQ(cls.size(), 2u);
  auto q = hypercube(3);
  auto classes = theta_partition(q.graph).classes(q.graph);
  ASSERT_EQ(classes.size(), 3u);
  std::vector<EdgeSet> expected{q.classes.at(1), q.classes.at(2), q.classes.at(3)};
  std::sort(classes.begin(), classes.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(classes, expected);
  // Ids follow least edges.
  auto t = theta_partition(q.graph);
  EXPECT_EQ(t.class_of[0], 0u);
}

TEST(Theta, ProductClassesStayInOneDirection) {
  for (const auto& [ga, gb] : std::vector<std::pair<Graph, Graph>>{
           {cycle_graph(4), complete_graph(4)}, {complete_bipartite_graph(3, 3), complete_graph(2)},
           {cycle_graph(6), cycle_graph(4)}, {hypercube(3).graph, complete_graph(2)}}) {
    auto p = cartesian_product(ga, gb);
    auto t = theta_partition(p.graph);
    std::vector<int> direction(t.class_count, -1);
    for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
      auto [a, b] = p.graph.edge(e);
      const int dir = p.coords(a).first == p.coords(b).first ? 1 : 0;
      auto& slot = direction[t.class_of[e]];
      if (slot == -1) slot = dir;
      EXPECT_EQ(slot, dir);
    }
  }
}

TEST(Theta, Primality) {
  EXPECT_EQ(prime_by_theta(folded_hypercube(4).graph), Primality::prime);
  EXPECT_EQ(prime_by_theta(folded_hypercube(5).graph), Primality::prime);
  EXPECT_EQ(prime_by_theta(complete_graph(5)), Primality::prime);
  EXPECT_EQ(prime_by_theta(hypercube(3).graph), Primality::inconclusive);
  EXPECT_THROW(prime_by_theta(Graph(3, std::vector<std::pair<Vertex, Vertex>>{})), InvalidInput);
  EXPECT_THROW(theta_partition(from_edge_list(4, {{0, 1}, {2, 3}})), InvalidInput);
}

TEST(Isometry, ShortestOddCycleOfFoldedCube) {
  auto g = folded_hypercube(4).graph;
  ASSERT_EQ(oracle::girth(g, true), 5u);
  // Walk 0 -> 1 -> 3 -> 7 -> 15 -> back to 0 over the complement edge.
  std::vector<Vertex> cycle{0, 1, 3, 7, 15};
  for (std::size_t i = 0; i < cycle.size(); ++i)
    ASSERT_TRUE(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) edges.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  EXPECT_TRUE(is_isometric_subgraph(g, cycle, edges));
  // The hexagon is not isometric once its long chord is present.
  auto h = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  std::vector<Vertex> hex{0, 1, 2, 3, 4, 5};
  std::vector<Edge> ring{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  EXPECT_FALSE(is_isometric_subgraph(h, hex, ring));
}
