//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/assemble.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "camd/error.hpp"

namespace camd {

namespace {

struct Instance {
  int index;
  std::string name;
  const Fragment *fragment;
  int vertex_offset;
};

struct Assembler {
  std::vector<Instance> instances;
  std::vector<VertexColor> atoms;
  std::vector<int> atom_instance;  // atom -> owning instance
  std::vector<int> slots;          // open single-bond slots per atom
  std::vector<Edge> edges;         // internal + added bonds
  std::vector<int> parent;         // union-find over atoms
  std::vector<int> instance_bonds; // added bonds per instance
  int max_results = 0;
  long long nodes = 0;
  bool truncated = false;
  std::map<std::string, MolecularGraph> found;

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool search(int last_atom, int last_peer);
  void record();
};

void Assembler::record() {
  std::vector<VertexColor> vertices = atoms;
  std::vector<int> degree(atoms.size(), 0);
  for (const Edge &e : edges) {
    ++degree[e.v];
    ++degree[e.w];
  }
  for (size_t v = 0; v < vertices.size(); ++v)
    vertices[v].open_valence = degree[v];
  int cycle_dim =
      static_cast<int>(edges.size()) - static_cast<int>(atoms.size()) + 1;
  MolecularGraph g =
      build_graph(std::move(vertices), edges, RingCounts{0, cycle_dim});
  std::string label = canonical_label(g);
  if (found.count(label)) return;
  if (static_cast<int>(found.size()) == max_results) {
    truncated = true;
    return;
  }
  found.emplace(std::move(label), std::move(g));
}

// Depth-first pairing of open slots. The lowest open atom is always paired
// next; consecutive pairings of the same atom use increasing peer indices so
// each edge multiset is generated once. Returns false to abort the search.
bool Assembler::search(int last_atom, int last_peer) {
  if (++nodes > 20'000'000)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "assembly enumeration exceeded node budget");
  if (truncated) return false;

  int atom = -1;
  for (size_t v = 0; v < slots.size(); ++v) {
    if (slots[v] > 0) {
      atom = static_cast<int>(v);
      break;
    }
  }
  if (atom < 0) {
    int root = find(0);
    for (size_t v = 1; v < slots.size(); ++v)
      if (find(static_cast<int>(v)) != root) return true;
    record();
    return !truncated;
  }

  // a sealed component that excludes open atoms can never connect
  {
    std::map<int, int> open_per_component;
    for (size_t v = 0; v < slots.size(); ++v)
      open_per_component[find(static_cast<int>(v))] += slots[v];
    if (open_per_component.size() > 1) {
      for (const auto &[root, open] : open_per_component)
        if (open == 0) return true;
    }
  }

  int first_peer = atom == last_atom ? last_peer + 1 : 0;
  std::set<std::string> tried_fresh;
  for (int p = first_peer; p < static_cast<int>(slots.size()); ++p) {
    if (p == atom || slots[p] <= 0) continue;
    if (atom_instance[p] == atom_instance[atom]) continue;
    bool already_bonded = false;
    for (const Edge &e : edges) {
      if (e.v == std::min(atom, p) && e.w == std::max(atom, p)) {
        already_bonded = true;
        break;
      }
    }
    if (already_bonded) continue;
    // untouched instances of one group are interchangeable
    const Instance &peer_inst = instances[atom_instance[p]];
    if (instance_bonds[peer_inst.index] == 0) {
      std::string key = peer_inst.name + ":" +
                        std::to_string(p - peer_inst.vertex_offset);
      if (!tried_fresh.insert(key).second) continue;
    }

    edges.push_back(
        {std::min(atom, p), std::max(atom, p), BondType::Single});
    --slots[atom];
    --slots[p];
    ++instance_bonds[atom_instance[atom]];
    ++instance_bonds[atom_instance[p]];
    std::vector<int> saved_parent = parent;
    int ra = find(atom), rb = find(p);
    if (ra != rb) parent[ra] = rb;
    bool keep_going = search(atom, p);
    parent = std::move(saved_parent);
    --instance_bonds[atom_instance[atom]];
    --instance_bonds[atom_instance[p]];
    ++slots[atom];
    ++slots[p];
    edges.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

AssemblyResult assemble_structures(const DescriptorVector &n,
                                   const GroupLibrary &lib, int max_results) {
  if (max_results <= 0)
    throw Error(ErrorCode::InvalidArgument, "max_results must be positive");
  if (n.total() == 0)
    throw Error(ErrorCode::InvalidArgument, "empty descriptor vector");

  Assembler a;
  a.max_results = max_results;
  for (const auto &[name, count] : n.counts()) {
    const Group &group = lib.at(name);
    if (!group.atom_pattern)
      throw Error(ErrorCode::InvalidArgument,
                  "group '" + name + "' carries no fragment");
    if (group.phi_arom > 0)
      throw Error(ErrorCode::InvalidArgument,
                  "aromatic groups are not assembled");
    for (int i = 0; i < count; ++i) {
      Instance inst{static_cast<int>(a.instances.size()), name,
                    &*group.atom_pattern, static_cast<int>(a.atoms.size())};
      for (int v = 0; v < inst.fragment->num_vertices(); ++v) {
        a.atoms.push_back(inst.fragment->vertex(v));
        a.atom_instance.push_back(inst.index);
        a.slots.push_back(inst.fragment->open_slots(v));
      }
      for (const Edge &e : inst.fragment->edges())
        a.edges.push_back(
            {e.v + inst.vertex_offset, e.w + inst.vertex_offset, e.type});
      a.instances.push_back(inst);
    }
  }
  if (static_cast<int>(a.atoms.size()) > 60)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "assembly supports at most 60 atoms");

  int total_slots = std::accumulate(a.slots.begin(), a.slots.end(), 0);
  if (total_slots % 2 != 0)
    throw Error(ErrorCode::NoAssembly, "odd number of open valences");

  a.parent.resize(a.atoms.size());
  std::iota(a.parent.begin(), a.parent.end(), 0);
  a.instance_bonds.assign(a.instances.size(), 0);
  for (const Edge &e : a.edges) {
    int ra = a.find(e.v), rb = a.find(e.w);
    if (ra != rb) a.parent[ra] = rb;
  }
  a.search(-1, -1);

  if (a.found.empty())
    throw Error(ErrorCode::NoAssembly,
                "counts " + n.to_string() + " admit no connected structure");

  AssemblyResult result;
  result.truncated = a.truncated;
  for (auto &[label, graph] : a.found)
    result.structures.push_back(std::move(graph));
  return result;
}

}  // namespace camd
