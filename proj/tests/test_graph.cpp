//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "camd/error.hpp"
#include "camd/graph.hpp"
#include "helpers.hpp"

using namespace camd;
using camd::testing::carbon_cycle;
using camd::testing::carbon_path;
using camd::testing::random_permutation;
using camd::testing::tmb;

TEST_CASE("ethane is the smallest valid graph") {
  MolecularGraph g = carbon_path(2);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.vertex(0).attached_hydrogens == 3);
}

TEST_CASE("2,2,3-trimethylbutane has the expected degree sequence") {
  MolecularGraph g = tmb();
  std::vector<int> degrees;
  for (int v = 0; v < g.num_vertices(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 1, 1, 1, 3, 4});
  CHECK(g.ring_counts() == RingCounts{0, 0});
}

TEST_CASE("disconnected input is rejected") {
  std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 3),
                             make_vertex("C", 3), make_vertex("C", 3)};
  std::vector<Edge> e{{0, 1, BondType::Single}, {2, 3, BondType::Single}};
  CHECK_THROWS_WITH_AS(build_graph(std::move(v), std::move(e)),
                       doctest::Contains("unreachable"), Error);
}

TEST_CASE("single-edit corruptions are rejected") {
  SUBCASE("removing an edge disconnects") {
    std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 2),
                               make_vertex("C", 3)};
    std::vector<Edge> e{{0, 1, BondType::Single}};
    CHECK_THROWS_AS(build_graph(std::move(v), std::move(e)), Error);
  }
  SUBCASE("an extra bond violates valence") {
    std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 2),
                               make_vertex("C", 3)};
    std::vector<Edge> e{{0, 1, BondType::Single},
                        {1, 2, BondType::Single},
                        {0, 2, BondType::Single}};
    try {
      build_graph(std::move(v), std::move(e), {0, 1});
      FAIL("expected ValenceViolation");
    } catch (const Error &err) {
      CHECK(err.code() == ErrorCode::ValenceViolation);
    }
  }
  SUBCASE("duplicate edges are rejected") {
    std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 3)};
    std::vector<Edge> e{{0, 1, BondType::Single}, {1, 0, BondType::Single}};
    try {
      build_graph(std::move(v), std::move(e));
      FAIL("expected DuplicateEdge");
    } catch (const Error &err) {
      CHECK(err.code() == ErrorCode::DuplicateEdge);
    }
  }
  SUBCASE("ring counts must match the cycle space") {
    std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 3)};
    std::vector<Edge> e{{0, 1, BondType::Single}};
    try {
      build_graph(std::move(v), std::move(e), {0, 1});
      FAIL("expected RingCountMismatch");
    } catch (const Error &err) {
      CHECK(err.code() == ErrorCode::RingCountMismatch);
    }
  }
}

TEST_CASE("distance matrix basics") {
  SUBCASE("single edge") {
    Eigen::MatrixXi d = distance_matrix(carbon_path(2));
    CHECK(d(0, 0) == 0);
    CHECK(d(0, 1) == 1);
    CHECK(d(1, 0) == 1);
  }
  SUBCASE("path ends of P6") {
    Eigen::MatrixXi d = distance_matrix(carbon_path(6));
    CHECK(d(0, 5) == 5);
  }
  SUBCASE("cyclohexane diameter is 3") {
    CHECK(distance_matrix(carbon_cycle(6)).maxCoeff() == 3);
  }
}

TEST_CASE("distance matrix equals per-vertex BFS on assorted fixtures") {
  std::vector<MolecularGraph> graphs{carbon_path(6), carbon_cycle(6), tmb()};
  for (const MolecularGraph &g : graphs) {
    Eigen::MatrixXi d = distance_matrix(g);
    CHECK(d == d.transpose().eval());
    CHECK(d.diagonal().isZero());
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::vector<int> row = bfs_distances(g, v);
      for (int u = 0; u < g.num_vertices(); ++u) CHECK(d(v, u) == row[u]);
    }
  }
}

TEST_CASE("canonical labels are permutation invariant") {
  std::mt19937_64 rng(7);
  SUBCASE("two relabelings of P6 agree") {
    MolecularGraph g = carbon_path(6);
    std::string label = canonical_label(g);
    for (int i = 0; i < 10; ++i) {
      MolecularGraph h = permute_graph(g, random_permutation(6, rng));
      CHECK(canonical_label(h) == label);
    }
  }
  SUBCASE("n-hexane and 2,3-dimethylbutane differ") {
    CHECK(canonical_label(carbon_path(6)) !=
          canonical_label(camd::testing::dmb()));
  }
  SUBCASE("1000 relabelings of the branched alkane collapse to one label") {
    MolecularGraph g = tmb();
    std::string label = canonical_label(g);
    int distinct = 1;
    for (int i = 0; i < 1000; ++i) {
      MolecularGraph h = permute_graph(g, random_permutation(7, rng));
      if (canonical_label(h) != label) ++distinct;
    }
    CHECK(distinct == 1);
  }
}

namespace {

MolecularGraph propene_like(const std::string &head_element) {
  // head=CH-CH3 with a double bond between head and the middle carbon
  int head_h = head_element == "N" ? 1 : 2;
  std::vector<VertexColor> v{
      make_vertex(head_element, head_h, Hybridization::Sp2, 1),
      make_vertex("C", 1, Hybridization::Sp2, 2),
      make_vertex("C", 3, Hybridization::Sp3, 1)};
  return build_graph(std::move(v),
                     {{0, 1, BondType::Double}, {1, 2, BondType::Single}});
}

}  // namespace

TEST_CASE("canonical labels respect colors and bond types") {
  MolecularGraph a = propene_like("C");

  // the mirrored vertex order is isomorphic
  MolecularGraph b = permute_graph(a, {2, 1, 0});
  CHECK(canonical_label(b) == canonical_label(a));

  // swapping the heteroatom changes the label
  MolecularGraph c = propene_like("N");
  CHECK(canonical_label(c) != canonical_label(a));

  // same connectivity with a single bond instead of a double bond differs
  std::vector<VertexColor> v{make_vertex("C", 3, Hybridization::Sp3, 1),
                             make_vertex("C", 2, Hybridization::Sp3, 2),
                             make_vertex("C", 3, Hybridization::Sp3, 1)};
  MolecularGraph propane = build_graph(
      std::move(v), {{0, 1, BondType::Single}, {1, 2, BondType::Single}});
  CHECK(canonical_label(propane) != canonical_label(a));
}
