#pragma once

// Cartesian products, layers, the Djokovic-Winkler relation and its closure,
// and lifting nice perfect matchings of the factors into the product.
//
// Product ids are row-major: (x, u) with x in G1 and u in G2 is x * v(G2) + u.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "antiforce/isomorphism.hpp"
#include "antiforce/matching.hpp"

namespace antiforce {

struct ProductGraph {
  Graph graph;
  Graph first;
  Graph second;

  Vertex id(Vertex x, Vertex u) const {
    return x * static_cast<Vertex>(second.vertex_count()) + u;
  }
  std::pair<Vertex, Vertex> coords(Vertex p) const {
    const auto n2 = static_cast<Vertex>(second.vertex_count());
    return {p / n2, p % n2};
  }
};

/// (x,u) ~ (y,v) iff (xy ∈ E(G1) and u = v) or (x = y and uv ∈ E(G2)).
inline ProductGraph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.vertex_count());
  const auto n2 = static_cast<Vertex>(g2.vertex_count());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g1.edge_count() * n2 + n1 * g2.edge_count());
  for (auto [x, y] : g1.edges())
    for (Vertex u = 0; u < n2; ++u) pairs.emplace_back(x * n2 + u, y * n2 + u);
  for (Vertex x = 0; x < n1; ++x)
    for (auto [u, v] : g2.edges()) pairs.emplace_back(x * n2 + u, x * n2 + v);
  return {Graph(static_cast<std::size_t>(n1) * n2, pairs), g1, g2};
}

enum class Factor { first, second };

struct Layer {
  std::vector<Vertex> vertices;  // vertices[i] is the product vertex over factor vertex i
  Graph graph;
};

/// The copy of one factor through `anchor`: with anchor (x,u), the first-factor
/// layer is {(y,u)} and the second-factor layer is {(x,v)}. The induced graph,
/// indexed by factor vertex, equals the factor exactly.
inline Layer layer(const ProductGraph& p, Factor which, Vertex anchor) {
  if (anchor >= p.graph.vertex_count()) throw InvalidInput("layer: anchor out of range");
  auto [x, u] = p.coords(anchor);
  Layer out;
  if (which == Factor::first) {
    for (Vertex y = 0; y < p.first.vertex_count(); ++y) out.vertices.push_back(p.id(y, u));
  } else {
    for (Vertex v = 0; v < p.second.vertex_count(); ++v) out.vertices.push_back(p.id(x, v));
  }
  out.graph = induced_subgraph(p.graph, out.vertices).graph;
  const Graph& factor = which == Factor::first ? p.first : p.second;
  if (!(out.graph == factor)) throw std::logic_error("layer: layer differs from its factor");
  return out;
}

/// M1 copied into every first-factor layer.
inline PerfectMatching rho_lift(const ProductGraph& p, const PerfectMatching& m1) {
  std::vector<Vertex> partner(p.graph.vertex_count());
  for (Vertex q = 0; q < partner.size(); ++q) {
    auto [x, u] = p.coords(q);
    partner[q] = p.id(m1.partner(x), u);
  }
  return PerfectMatching(std::move(partner));
}

/// M2 copied into every second-factor layer.
inline PerfectMatching sigma_lift(const ProductGraph& p, const PerfectMatching& m2) {
  std::vector<Vertex> partner(p.graph.vertex_count());
  for (Vertex q = 0; q < partner.size(); ++q) {
    auto [x, u] = p.coords(q);
    partner[q] = p.id(x, m2.partner(u));
  }
  return PerfectMatching(std::move(partner));
}

/// Record of one union performed while closing the relation: edges a = xy and
/// b = uv were related with d(x,u) + d(y,v) != d(x,v) + d(y,u).
struct ThetaWitness {
  EdgeId a = 0;
  EdgeId b = 0;
  std::array<std::uint32_t, 4> distances{};  // d(x,u), d(y,v), d(x,v), d(y,u)
};

struct ThetaPartition {
  std::vector<std::size_t> class_of;  // indexed by EdgeId
  std::size_t class_count = 0;
  std::vector<ThetaWitness> witnesses;

  /// Classes as edge sets, in class-id order (ids follow least edges).
  std::vector<EdgeSet> classes(const Graph& g) const {
    std::vector<std::vector<Edge>> out(class_count);
    for (EdgeId i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(g.edge(i));
    return {out.begin(), out.end()};
  }
};

inline ThetaPartition theta_partition(const Graph& g) {
  if (!is_connected(g)) throw InvalidInput("theta_partition: graph must be connected");
  const auto d = all_pairs_distances(g);
  const auto m = g.edge_count();
  boost::disjoint_sets_with_storage<> sets(m);
  ThetaPartition out;
  for (EdgeId a = 0; a < m; ++a) {
    const auto [x, y] = g.edge(a);
    for (EdgeId b = a + 1; b < m; ++b) {
      const auto [u, v] = g.edge(b);
      std::array<std::uint32_t, 4> q{d(x, u), d(y, v), d(x, v), d(y, u)};
      if (q[0] + q[1] == q[2] + q[3]) continue;
      if (sets.find_set(a) != sets.find_set(b)) {
        sets.union_set(a, b);
        out.witnesses.push_back({a, b, q});
      }
    }
  }
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id_of_root(m, kUnassigned);
  out.class_of.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    auto r = sets.find_set(e);
    if (id_of_root[r] == kUnassigned) id_of_root[r] = out.class_count++;
    out.class_of[e] = id_of_root[r];
  }
  return out;
}

enum class Primality { prime, inconclusive };

/// A single closure class certifies primality; several classes prove nothing.
inline Primality prime_by_theta(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidInput("prime_by_theta: graph has no edges");
  return theta_partition(g).class_count == 1 ? Primality::prime : Primality::inconclusive;
}

}  // namespace antiforce
