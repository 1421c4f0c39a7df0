//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "camd/error.hpp"

namespace camd {

namespace {

struct Tile {
  int group_index;
  int fragment_size;
  uint64_t mask;
};

bool vertex_matches(const VertexColor &mol, const VertexColor &frag) {
  return mol.element == frag.element &&
         mol.attached_hydrogens == frag.attached_hydrogens;
}

// Order fragment vertices so every vertex after the first has an
// already-placed fragment neighbor.
std::vector<int> placement_order(const Fragment &f) {
  std::vector<int> order{0};
  std::vector<char> placed(f.num_vertices(), 0);
  placed[0] = 1;
  while (static_cast<int>(order.size()) < f.num_vertices()) {
    for (int v = 0; v < f.num_vertices(); ++v) {
      if (placed[v]) continue;
      bool anchored = false;
      for (int u : f.neighbors(v)) anchored |= placed[u] != 0;
      if (anchored) {
        order.push_back(v);
        placed[v] = 1;
        break;
      }
    }
  }
  return order;
}

void enumerate_embeddings(const MolecularGraph &g, const Fragment &f,
                          std::set<uint64_t> &masks) {
  const std::vector<int> order = placement_order(f);
  std::vector<int> map(f.num_vertices(), -1);
  std::vector<char> used(g.num_vertices(), 0);

  auto accept = [&]() {
    // induced-edge exactness: molecule edges inside the image must be
    // fragment edges (types already matched during placement), and edges
    // leaving the image must be single or aromatic
    int internal = 0;
    uint64_t mask = 0;
    for (int v : map) mask |= uint64_t{1} << v;
    for (int fv = 0; fv < f.num_vertices(); ++fv) {
      for (int u : g.neighbors(map[fv])) {
        if (mask >> u & 1) {
          ++internal;
        } else {
          BondType t = g.bond(map[fv], u);
          if (t != BondType::Single && t != BondType::Aromatic) return;
        }
      }
    }
    if (internal != 2 * static_cast<int>(f.edges().size())) return;
    masks.insert(mask);
  };

  auto place = [&](auto &&self, size_t step) -> void {
    if (step == order.size()) {
      accept();
      return;
    }
    int fv = order[step];
    // candidates: neighbors of an already-placed fragment neighbor, or any
    // vertex for the root
    std::vector<int> candidates;
    int anchor = -1;
    for (int u : f.neighbors(fv)) {
      if (map[u] >= 0) {
        anchor = u;
        break;
      }
    }
    if (anchor < 0) {
      candidates.resize(g.num_vertices());
      for (int i = 0; i < g.num_vertices(); ++i) candidates[i] = i;
    } else {
      candidates = g.neighbors(map[anchor]);
    }
    auto fragment_bond = [&](int a, int b) {
      for (const Edge &e : f.edges()) {
        if ((e.v == a && e.w == b) || (e.v == b && e.w == a)) return e.type;
      }
      throw Error(ErrorCode::Internal, "missing fragment edge");
    };
    for (int gv : candidates) {
      if (used[gv] || !vertex_matches(g.vertex(gv), f.vertex(fv))) continue;
      bool edges_ok = true;
      for (int u : f.neighbors(fv)) {
        if (map[u] < 0) continue;
        if (!g.has_edge(gv, map[u]) ||
            g.bond(gv, map[u]) != fragment_bond(fv, u)) {
          edges_ok = false;
          break;
        }
      }
      if (!edges_ok) continue;
      map[fv] = gv;
      used[gv] = 1;
      self(self, step + 1);
      map[fv] = -1;
      used[gv] = 0;
    }
  };
  place(place, 0);
}

}  // namespace

DescriptorVector decompose_into_groups(const MolecularGraph &g,
                                       const GroupLibrary &lib,
                                       bool require_unique) {
  const int n = g.num_vertices();
  if (n > 64)
    throw Error(ErrorCode::InvalidArgument,
                "decomposition supports at most 64 atoms");

  std::vector<Tile> tiles;
  std::vector<int> group_order(lib.size());
  for (int i = 0; i < lib.size(); ++i) group_order[i] = i;
  // largest fragment first, names break ties
  std::sort(group_order.begin(), group_order.end(), [&](int a, int b) {
    const Group &ga = lib.groups()[a];
    const Group &gb = lib.groups()[b];
    int sa = ga.atom_pattern ? ga.atom_pattern->num_vertices() : 0;
    int sb = gb.atom_pattern ? gb.atom_pattern->num_vertices() : 0;
    if (sa != sb) return sa > sb;
    return ga.name < gb.name;
  });
  for (int gi : group_order) {
    const Group &group = lib.groups()[gi];
    if (!group.atom_pattern) continue;
    std::set<uint64_t> masks;
    enumerate_embeddings(g, *group.atom_pattern, masks);
    for (uint64_t m : masks)
      tiles.push_back({gi, group.atom_pattern->num_vertices(), m});
  }

  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::vector<std::vector<std::string>> covers;  // sorted name multisets
  std::vector<DescriptorVector> cover_counts;
  std::vector<int> chosen;
  long long nodes = 0;

  auto search = [&](auto &&self, uint64_t covered) -> void {
    if (++nodes > 5'000'000)
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "decomposition cover search exceeded node budget");
    if (covered == full) {
      std::vector<std::string> names;
      DescriptorVector counts;
      for (int t : chosen) {
        names.push_back(lib.groups()[tiles[t].group_index].name);
        counts.add(lib.groups()[tiles[t].group_index].name, 1);
      }
      std::sort(names.begin(), names.end());
      covers.push_back(std::move(names));
      cover_counts.push_back(std::move(counts));
      return;
    }
    int atom = 0;
    while (covered >> atom & 1) ++atom;
    for (size_t t = 0; t < tiles.size(); ++t) {
      if (!(tiles[t].mask >> atom & 1)) continue;
      if (tiles[t].mask & covered) continue;
      chosen.push_back(static_cast<int>(t));
      self(self, covered | tiles[t].mask);
      chosen.pop_back();
    }
  };
  search(search, 0);

  if (covers.empty())
    throw Error(ErrorCode::NoCover,
                "no exact cover of the molecule by library fragments");

  size_t best = 0;
  for (size_t i = 1; i < covers.size(); ++i)
    if (covers[i] < covers[best]) best = i;

  if (require_unique) {
    for (size_t i = 0; i < cover_counts.size(); ++i) {
      if (!(cover_counts[i] == cover_counts[best]))
        throw Error(ErrorCode::AmbiguousCover,
                    "multiple distinct covers: " +
                        cover_counts[best].to_string() + " vs " +
                        cover_counts[i].to_string());
    }
  }
  return cover_counts[best];
}

}  // namespace camd
