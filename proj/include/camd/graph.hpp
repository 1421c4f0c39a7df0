//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_GRAPH_HPP
#define CAMD_GRAPH_HPP

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace camd {

enum class BondType { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

enum class Hybridization { Sp, Sp2, Sp3, Aromatic };

/// Twice the bond order; aromatic counts as 1.5 so everything stays integral.
int bond_order_x2(BondType type);

std::string_view bond_type_token(BondType type);
BondType parse_bond_type(std::string_view token);
std::string_view hybridization_token(Hybridization tag);
Hybridization parse_hybridization(std::string_view token);

/// Per-atom coloring of a hydrogen-suppressed graph. `open_valence` is the
/// non-hydrogen neighbor count (the delta convention); hydrogens live only
/// in `attached_hydrogens`.
struct VertexColor {
  std::string element;
  int open_valence = 0;
  Hybridization tag = Hybridization::Sp3;
  int attached_hydrogens = 0;
  int valence_electrons = 0;  // Z^V
  int atomic_number = 0;      // Z

  bool operator==(const VertexColor &) const = default;
};

/// Builds a VertexColor from the element table. When `open_valence` is
/// negative it defaults to standard_valence - hydrogens (all-single bonding).
VertexColor make_vertex(std::string_view element, int hydrogens,
                        Hybridization tag = Hybridization::Sp3,
                        int open_valence = -1);

struct Edge {
  int v = 0;
  int w = 0;
  BondType type = BondType::Single;

  bool operator==(const Edge &) const = default;
};

struct RingCounts {
  int aromatic = 0;
  int aliphatic = 0;

  bool operator==(const RingCounts &) const = default;
};

/// Connected, hydrogen-suppressed colored molecular graph. Construct through
/// build_graph, which enforces the valence and ring-count invariants; once
/// built the graph is immutable and safe to share across threads.
class MolecularGraph {
 public:
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexColor> &vertices() const { return vertices_; }
  const VertexColor &vertex(int v) const { return vertices_.at(v); }
  const std::vector<Edge> &edges() const { return edges_; }
  RingCounts ring_counts() const { return rings_; }

  const std::vector<int> &neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(int v, int w) const;
  BondType bond(int v, int w) const;

  bool operator==(const MolecularGraph &other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           rings_ == other.rings_;
  }

 private:
  friend MolecularGraph build_graph(std::vector<VertexColor>,
                                    std::vector<Edge>, RingCounts);
  MolecularGraph() = default;

  std::vector<VertexColor> vertices_;
  std::vector<Edge> edges_;  // normalized v < w, sorted
  RingCounts rings_;
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

/// Validates and assembles a molecular graph.
/// Throws Disconnected, ValenceViolation, DuplicateEdge, RingCountMismatch,
/// or InvalidArgument (bad indices, self-loops, negative counts).
MolecularGraph build_graph(std::vector<VertexColor> vertices,
                           std::vector<Edge> edges, RingCounts rings = {});

/// All-pairs shortest-path distances over unit edge weights (BFS per vertex).
Eigen::MatrixXi distance_matrix(const MolecularGraph &g);

/// BFS distances from a single source.
std::vector<int> bfs_distances(const MolecularGraph &g, int source);

/// Canonical certificate: equal strings exactly when the graphs are
/// isomorphic respecting vertex colors and bond types. Iterative color
/// refinement with branching on residual symmetry.
std::string canonical_label(const MolecularGraph &g);

/// Relabels vertices by `perm` (new index = perm[old index]).
MolecularGraph permute_graph(const MolecularGraph &g,
                             const std::vector<int> &perm);

}  // namespace camd

#endif  // CAMD_GRAPH_HPP
