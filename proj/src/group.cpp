//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/group.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "camd/elements.hpp"
#include "camd/error.hpp"

namespace camd {

Fragment::Fragment(std::vector<VertexColor> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = num_vertices();
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "empty fragment");
  for (Edge &e : edges_) {
    if (e.v < 0 || e.v >= n || e.w < 0 || e.w >= n || e.v == e.w)
      throw Error(ErrorCode::InvalidArgument, "bad fragment edge");
    if (e.v > e.w) std::swap(e.v, e.w);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
    return std::tie(a.v, a.w) < std::tie(b.v, b.w);
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].v == edges_[i - 1].v && edges_[i].w == edges_[i - 1].w)
      throw Error(ErrorCode::DuplicateEdge, "duplicate fragment edge");
  }
  adjacency_.assign(n, {});
  std::vector<int> order_x2(n, 0);
  for (const Edge &e : edges_) {
    adjacency_[e.v].push_back(e.w);
    adjacency_[e.w].push_back(e.v);
    order_x2[e.v] += bond_order_x2(e.type);
    order_x2[e.w] += bond_order_x2(e.type);
  }
  for (auto &adj : adjacency_) std::sort(adj.begin(), adj.end());

  open_slots_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    const VertexColor &c = vertices_[v];
    int allowed = element_info(c.element).standard_valence;
    int free_x2 = 2 * (allowed - c.attached_hydrogens) - order_x2[v];
    if (free_x2 < 0 || free_x2 % 2 != 0)
      throw Error(ErrorCode::ValenceViolation,
                  "fragment vertex " + std::to_string(v) +
                      " oversaturated or half-bonded");
    open_slots_[v] = free_x2 / 2;
  }

  // connectivity
  std::vector<int> seen(n, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push(u);
      }
    }
  }
  if (reached != n)
    throw Error(ErrorCode::Disconnected, "fragment not connected");
}

int Fragment::total_open() const {
  int t = 0;
  for (int s : open_slots_) t += s;
  return t;
}

void validate_group(const Group &group) {
  if (group.name.empty())
    throw Error(ErrorCode::InvalidArgument, "group without a name");
  if (group.phi_ali < 0 || group.phi_arom < 0 ||
      group.aromatic_atom_count < 0 || group.rho < 0)
    throw Error(ErrorCode::InvalidArgument,
                "group '" + group.name + "': negative valence data");
  if (group.aromatic_atom_count == 0 &&
      (group.phi_arom != 0 || group.rho != 0))
    throw Error(ErrorCode::InvalidArgument,
                "group '" + group.name +
                    "': aromatic valences require aromatic atoms");
  if (group.atom_pattern) {
    int open = group.atom_pattern->total_open();
    if (open != group.phi_total())
      throw Error(ErrorCode::InvalidArgument,
                  "group '" + group.name + "': fragment open slots " +
                      std::to_string(open) + " != phi " +
                      std::to_string(group.phi_total()));
  }
}

GroupLibrary::GroupLibrary(std::vector<Group> groups) {
  for (auto &g : groups) add(std::move(g));
}

void GroupLibrary::add(Group group) {
  validate_group(group);
  if (contains(group.name))
    throw Error(ErrorCode::DuplicateName,
                "duplicate group '" + group.name + "'");
  groups_.push_back(std::move(group));
}

bool GroupLibrary::contains(const std::string &name) const {
  for (const auto &g : groups_)
    if (g.name == name) return true;
  return false;
}

const Group &GroupLibrary::at(const std::string &name) const {
  for (const auto &g : groups_)
    if (g.name == name) return g;
  throw Error(ErrorCode::UnknownGroup, "no group named '" + name + "'");
}

std::vector<std::string> GroupLibrary::names() const {
  std::vector<std::string> out;
  out.reserve(groups_.size());
  for (const auto &g : groups_) out.push_back(g.name);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace camd
