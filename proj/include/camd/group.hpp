//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_GROUP_HPP
#define CAMD_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "camd/graph.hpp"

namespace camd {

/// Connected molecular fragment with open attachment points. Unlike a full
/// MolecularGraph, vertices may have unmet valence: the shortfall is the
/// number of external single bonds the fragment will form.
class Fragment {
 public:
  Fragment(std::vector<VertexColor> vertices, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexColor> &vertices() const { return vertices_; }
  const VertexColor &vertex(int v) const { return vertices_.at(v); }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<int> &neighbors(int v) const { return adjacency_.at(v); }

  /// External single bonds vertex v must still form.
  int open_slots(int v) const { return open_slots_.at(v); }
  int total_open() const;

 private:
  std::vector<VertexColor> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> open_slots_;
};

/// GC building block: valence requirements plus an optional explicit
/// fragment used for decomposition and structure assembly.
struct Group {
  std::string name;
  int phi_ali = 0;             // aliphatic open valence
  int phi_arom = 0;            // aromatic open valence
  int aromatic_atom_count = 0; // A^arom
  int rho = 0;                 // aliphatic attachment points on aromatic atoms
  std::optional<Fragment> atom_pattern;

  int phi_total() const { return phi_ali + phi_arom; }
};

void validate_group(const Group &group);

class GroupLibrary {
 public:
  GroupLibrary() = default;
  explicit GroupLibrary(std::vector<Group> groups);

  void add(Group group);

  int size() const { return static_cast<int>(groups_.size()); }
  const std::vector<Group> &groups() const { return groups_; }
  bool contains(const std::string &name) const;
  const Group &at(const std::string &name) const;  // throws UnknownGroup

  std::vector<std::string> names() const;  // sorted

 private:
  std::vector<Group> groups_;
};

}  // namespace camd

#endif  // CAMD_GROUP_HPP
