//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "camd/decompose.hpp"
#include "camd/error.hpp"
#include "camd/io.hpp"
#include "helpers.hpp"

using namespace camd;
using camd::testing::fixture;

namespace {

GroupLibrary alcohol_lib() {
  return parse_group_library(fixture("alcohol.lib"));
}

}  // namespace

TEST_CASE("propanol decomposes into CH3 + 2 CH2 + OH") {
  MolecularGraph g = parse_graph_file(fixture("propanol.graph"));
  DescriptorVector n = decompose_into_groups(g, alcohol_lib());
  CHECK(n.get("CH3") == 1);
  CHECK(n.get("CH2") == 2);
  CHECK(n.get("OH") == 1);
  CHECK(n.total() == 4);
}

TEST_CASE("propanol with a CH2OH group prefers the lexicographic cover") {
  MolecularGraph g = parse_graph_file(fixture("propanol.graph"));
  GroupLibrary lib = parse_group_library(fixture("alcohol2.lib"));
  DescriptorVector n = decompose_into_groups(g, lib);
  CHECK(n.get("CH3") == 1);
  CHECK(n.get("CH2") == 1);
  CHECK(n.get("CH2OH") == 1);
}

TEST_CASE("a single matching fragment covers the whole molecule") {
  GroupLibrary lib;
  Group methanol;
  methanol.name = "MeOH";
  methanol.phi_ali = 0;
  methanol.atom_pattern = Fragment(
      {make_vertex("C", 3), make_vertex("O", 1)}, {{0, 1, BondType::Single}});
  lib.add(methanol);
  MolecularGraph methanol_graph =
      build_graph({make_vertex("C", 3), make_vertex("O", 1)},
                  {{0, 1, BondType::Single}});
  DescriptorVector n = decompose_into_groups(methanol_graph, lib);
  CHECK(n.get("MeOH") == 1);
  CHECK(n.total() == 1);
}

TEST_CASE("no cover raises NoCover") {
  MolecularGraph g = parse_graph_file(fixture("propanol.graph"));
  GroupLibrary lib;
  Group ch3;
  ch3.name = "CH3";
  ch3.phi_ali = 1;
  ch3.atom_pattern = Fragment({make_vertex("C", 3)}, {});
  lib.add(ch3);
  try {
    decompose_into_groups(g, lib);
    FAIL("expected NoCover");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NoCover);
  }
}

TEST_CASE("ambiguous covers are reported when uniqueness is requested") {
  MolecularGraph g = parse_graph_file(fixture("propanol.graph"));
  GroupLibrary lib = parse_group_library(fixture("alcohol2.lib"));
  GroupLibrary both;
  for (const Group &grp : lib.groups()) both.add(grp);
  Group oh;
  oh.name = "OH";
  oh.phi_ali = 1;
  oh.atom_pattern = Fragment({make_vertex("O", 1)}, {});
  both.add(oh);
  // now {CH3,CH2,CH2,OH} and {CH3,CH2,CH2OH} both tile propanol
  try {
    decompose_into_groups(g, both, /*require_unique=*/true);
    FAIL("expected AmbiguousCover");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::AmbiguousCover);
  }
  // without the flag the lexicographically smallest sorted name list wins
  DescriptorVector n = decompose_into_groups(g, both);
  CHECK(n.get("CH2") == 2);  // [CH2,CH2,CH3,OH] < [CH2,CH2OH,CH3]
  CHECK(n.get("OH") == 1);
}

TEST_CASE("every heavy atom is covered exactly once") {
  MolecularGraph g = camd::testing::dmb();
  GroupLibrary lib = parse_group_library(fixture("fig8.lib"));
  DescriptorVector n = decompose_into_groups(g, lib);
  long long atoms = 0;
  for (const auto &[name, count] : n.counts())
    atoms +=
        static_cast<long long>(lib.at(name).atom_pattern->num_vertices()) *
        count;
  CHECK(atoms == g.num_vertices());
}
