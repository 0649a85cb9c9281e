#include <gtest/gtest.h>

#include "antiforce/generators.hpp"
#include "antiforce/graph.hpp"
#include "antiforce/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace antiforce;

TEST(FromEdgeList, FourCycle) {
  auto g = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(FromEdgeList, SingleEdge) {
  auto g = from_edge_list(2, {{0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(FromEdgeList, RejectsLoop) { EXPECT_THROW(from_edge_list(3, {{0, 0}}), InvalidInput); }

TEST(FromEdgeList, RejectsOutOfRange) { EXPECT_THROW(from_edge_list(3, {{0, 3}}), InvalidInput); }

TEST(FromEdgeList, CollapsesDuplicatesAndOrientation) {
  auto g = from_edge_list(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(FromEdgeList, ExportRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    auto g = folded_hypercube(n).graph;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto [u, v] : g.edges()) pairs.emplace_back(u, v);
    EXPECT_EQ(from_edge_list(g.vertex_count(), pairs), g);
  }
}

TEST(Graph, AdjacencyMatchesEdgeListAndIsSymmetric) {
  for (const auto& g : {complete_graph(5), hypercube(4).graph, enhanced_hypercube(4, 1).graph,
                        complete_bipartite_graph(2, 3)}) {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      degree_sum += g.degree(u);
      EXPECT_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        const bool listed = u != v && g.has_edge(make_edge(u, v)) &&
                            std::binary_search(g.edges().begin(), g.edges().end(), make_edge(u, v));
        EXPECT_EQ(g.adjacent(u, v), listed);
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      auto [u, v] = g.edge(id);
      EXPECT_LT(u, v);
      EXPECT_EQ(g.edge_id(u, v), id);
      EXPECT_EQ(g.edge_id(v, u), id);
    }
  }
}

TEST(Distances, FourCycleAntipodal) { EXPECT_EQ(all_pairs_distances(cycle_graph(4))(0, 2), 2u); }

TEST(Distances, CubeCorners) { EXPECT_EQ(all_pairs_distances(hypercube(3).graph)(0b000, 0b111), 3u); }

TEST(Distances, AcrossComponentsIsUnreachable) {
  auto g = from_edge_list(4, {{0, 1}, {2, 3}});
  auto d = all_pairs_distances(g);
  EXPECT_EQ(d(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_EQ(d(0, 1), 1u);
}

TEST(Distances, MatchFloydWarshallAndAreMetric) {
  for (const auto& g : {hypercube(4).graph, folded_hypercube(4).graph, enhanced_hypercube(4, 1).graph,
                        cycle_graph(7), from_edge_list(5, {{0, 1}, {2, 3}, {3, 4}})}) {
    auto d = all_pairs_distances(g);
    auto ref = oracle::distances(g);
    const auto n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0u);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), ref[u][v]);
        EXPECT_EQ(d(u, v), d(v, u));
        for (Vertex w = 0; w < n; ++w) {
          if (d(u, w) != DistanceMatrix::kUnreachable && d(w, v) != DistanceMatrix::kUnreachable) {
            EXPECT_LE(d(u, v), d(u, w) + d(w, v));
          }
        }
      }
    }
  }
}

TEST(Distances, HypercubeDistanceIsHamming) {
  const int n = 4;
  auto d = all_pairs_distances(hypercube(n).graph);
  for (Vertex x = 0; x < 16; ++x)
    for (Vertex y = 0; y < 16; ++y) EXPECT_EQ(d(x, y), hamming_distance(x, y, n));
}

TEST(InducedSubgraph, PairInCompleteGraph) {
  auto sub = induced_subgraph(complete_graph(4), std::vector<Vertex>{1, 3});
  EXPECT_EQ(sub.graph, complete_graph(2));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(sub.from_parent[3], 1u);
  EXPECT_EQ(sub.from_parent[0], InducedSubgraph::kNoVertex);
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  for (const auto& g : {hypercube(3).graph, folded_hypercube(4).graph, cycle_graph(5)}) {
    std::vector<Vertex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    EXPECT_EQ(induced_subgraph(g, all).graph, g);
  }
}

TEST(InducedSubgraph, TwoFirstCoordinateEdgesSpanAFourCycle) {
  // 000-001 and 010-011 in Q3: the four endpoints induce exactly a 4-cycle.
  auto sub = induced_subgraph(hypercube(3).graph, std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_EQ(sub.graph.edge_count(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(sub.graph.degree(v), 2u);
  EXPECT_TRUE(is_isomorphic(sub.graph, cycle_graph(4)));
}

TEST(Bipartition, FourCycle) {
  auto bp = bipartition(cycle_graph(4));
  ASSERT_TRUE(bp);
  EXPECT_EQ(bp->x, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(bp->y, (std::vector<Vertex>{1, 3}));
}

TEST(Bipartition, OddCycleGraphsHaveNone) {
  EXPECT_FALSE(bipartition(complete_graph(4)));
  EXPECT_FALSE(bipartition(folded_hypercube(4).graph));
  EXPECT_TRUE(bipartition(folded_hypercube(5).graph));
}

TEST(Bipartition, PartsAreIndependentAndLeastVertexIsInX) {
  for (const auto& g : {hypercube(4).graph, folded_hypercube(3).graph, complete_bipartite_graph(3, 2),
                        from_edge_list(6, {{1, 2}, {4, 5}, {3, 4}})}) {
    auto bp = bipartition(g);
    ASSERT_TRUE(bp);
    std::vector<int> side(g.vertex_count(), -1);
    for (auto v : bp->x) side[v] = 0;
    for (auto v : bp->y) {
      EXPECT_EQ(side[v], -1);
      side[v] = 1;
    }
    EXPECT_EQ(std::count(side.begin(), side.end(), -1), 0);
    for (auto [u, v] : g.edges()) EXPECT_NE(side[u], side[v]);
    for (const auto& comp : connected_components(g)) EXPECT_EQ(side[comp.front()], 0);
  }
}

TEST(Isometry, ShortestCycleOfFoldedCubeIsIsometric) {
  auto g = folded_hypercube(4).graph;
  EXPECT_TRUE(is_isometric_subgraph(g, std::vector<Vertex>{0, 1, 3, 2},
                                    std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}, {0, 2}}));
}

TEST(Isometry, SixCycleThroughComplementaryEdge) {
  // 0-15 is a complementary edge; 0 and 3 are at distance 2 in the host graph
  // but 3 apart along the cycle.
  auto g = folded_hypercube(4).graph;
  std::vector<Vertex> cyc{0, 15, 14, 12, 3, 1};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cyc.size(); ++i) edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  auto sub = Graph(16, std::span<const Edge>(edges));
  auto dg = oracle::distances(g);
  auto dh = oracle::distances(sub);
  bool expected = true;
  for (auto a : cyc)
    for (auto b : cyc) expected = expected && dg[a][b] == dh[a][b];
  EXPECT_EQ(is_isometric_subgraph(g, cyc, edges), expected);
  EXPECT_FALSE(expected);
}

TEST(Isometry, ShortestOddCycleOfFoldedCubeIsIsometric) {
  // 0-1-3-7-15-0: four cube edges and one complementary edge.
  auto g = folded_hypercube(4).graph;
  std::vector<Vertex> cyc{0, 1, 3, 7, 15};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cyc.size(); ++i) edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  EXPECT_EQ(oracle::girth(g, true), 5u);
  EXPECT_TRUE(is_isometric_subgraph(g, cyc, edges));
}

TEST(Isometry, WholeGraphIsIsometric) {
  auto g = hypercube(3).graph;
  std::vector<Vertex> all(8);
  std::iota(all.begin(), all.end(), Vertex{0});
  EXPECT_TRUE(is_isometric_subgraph(g, all, g.edges()));
}

TEST(Isometry, RejectsNonSubgraph) {
  auto g = cycle_graph(4);
  EXPECT_THROW(is_isometric_subgraph(g, std::vector<Vertex>{0, 2}, std::vector<Edge>{{0, 2}}), InvalidInput);
  EXPECT_THROW(is_isometric_subgraph(g, std::vector<Vertex>{0}, std::vector<Edge>{{0, 1}}), InvalidInput);
}

TEST(Components, OrderedByLeastVertex) {
  auto comps = connected_components(from_edge_list(5, {{3, 4}, {0, 2}}));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{1}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{3, 4}));
}
