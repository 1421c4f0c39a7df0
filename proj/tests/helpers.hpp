//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_TESTS_HELPERS_HPP
#define CAMD_TESTS_HELPERS_HPP

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "camd/graph.hpp"

namespace camd::testing {

inline std::string fixture(const std::string &name) {
  return std::string(CAMD_FIXTURE_DIR) + "/" + name;
}

inline MolecularGraph carbon_path(int length) {
  std::vector<VertexColor> vertices;
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) {
    int h = (i == 0 || i == length - 1) ? 3 : 2;
    if (length == 1) h = 4;
    vertices.push_back(make_vertex("C", h));
    if (i > 0) edges.push_back({i - 1, i, BondType::Single});
  }
  return build_graph(std::move(vertices), std::move(edges));
}

inline MolecularGraph carbon_cycle(int length) {
  std::vector<VertexColor> vertices;
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) {
    vertices.push_back(make_vertex("C", 2));
    edges.push_back({i, (i + 1) % length, BondType::Single});
  }
  return build_graph(std::move(vertices), std::move(edges), {0, 1});
}

/// 2,3-dimethylbutane
inline MolecularGraph dmb() {
  std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 1),
                             make_vertex("C", 1), make_vertex("C", 3),
                             make_vertex("C", 3), make_vertex("C", 3)};
  std::vector<Edge> e{{0, 1, BondType::Single},
                      {1, 2, BondType::Single},
                      {2, 3, BondType::Single},
                      {1, 4, BondType::Single},
                      {2, 5, BondType::Single}};
  return build_graph(std::move(v), std::move(e));
}

/// 2,2,3-trimethylbutane
inline MolecularGraph tmb() {
  std::vector<VertexColor> v{make_vertex("C", 3), make_vertex("C", 1),
                             make_vertex("C", 3), make_vertex("C", 0),
                             make_vertex("C", 3), make_vertex("C", 3),
                             make_vertex("C", 3)};
  std::vector<Edge> e{{0, 1, BondType::Single},
                      {1, 2, BondType::Single},
                      {1, 3, BondType::Single},
                      {3, 4, BondType::Single},
                      {3, 5, BondType::Single},
                      {3, 6, BondType::Single}};
  return build_graph(std::move(v), std::move(e));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64 &rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace camd::testing

#endif  // CAMD_TESTS_HELPERS_HPP
