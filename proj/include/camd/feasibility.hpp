//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_FEASIBILITY_HPP
#define CAMD_FEASIBILITY_HPP

#include <Eigen/Dense>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "camd/descriptor.hpp"
#include "camd/graph.hpp"
#include "camd/group.hpp"

namespace camd {

/// One evaluated constraint. For equality checks `residual` is lhs - rhs;
/// for inequality checks it is the slack (non-negative means satisfied).
/// All arithmetic is exact integer arithmetic.
struct CheckLine {
  std::string name;
  bool ok = false;
  long long residual = 0;
};

std::vector<std::string> render_check_lines(
    const std::vector<CheckLine> &checks);

// ---------------------------------------------------------------------------
// Group-contribution feasibility
// ---------------------------------------------------------------------------

struct GcFeasibilityReport {
  int m = -1;  // ring parameter: -1 acyclic, 0 monocyclic, 1 bicyclic
  bool valence_balance_ok = false;
  long long valence_residual = 0;  // balance_lhs - balance_rhs
  long long balance_lhs = 0;       // sum (2 - phi) * n over aliphatic groups
  long long balance_rhs = 0;
  std::map<std::string, bool> sufficiency_ok;            // groups present in n
  std::map<std::string, long long> sufficiency_required; // rhs per group
  std::map<std::string, long long> sufficiency_slack;    // lhs - rhs
  long long total_count = 0;                             // sum of n
  bool aromatic_balance_ok = true;
  bool aromatic_atom_ok = true;
  bool aromatic_checked = false;
  long long aromatic_balance_lhs = 0;   // sum (2 - phi_arom) * n
  long long aromatic_atom_residual = 0; // aromatic atoms - 6 * N_R^arom

  bool ok() const;
  std::vector<CheckLine> checks() const;
};

/// Valence balance sum_d (phi_d - 2) n_d = 2m plus the per-group
/// sufficiency conditions, over aliphatic valences. Groups absent from n
/// are skipped in the sufficiency sweep.
GcFeasibilityReport check_gc_basic(const DescriptorVector &n,
                                   const GroupLibrary &lib, int m);

/// The five aromatic-extension equations, benzylic six-membered rings
/// assumed. Aliphatic and aromatic sufficiency are reported per group.
GcFeasibilityReport check_gc_aromatic(const DescriptorVector &n,
                                      const GroupLibrary &lib, int rings_arom,
                                      int rings_ali);

// ---------------------------------------------------------------------------
// Topological-index feasibility (adjacency-matrix formulation)
// ---------------------------------------------------------------------------

struct TiNodeType {
  std::string name;
  int delta = 0;                 // total valence of the node type
  std::array<int, 3> phi{0, 0, 0};  // required single/double/triple bonds
  bool dummy = false;
};

/// Vertex-type assignment y and bond tensor a over bond types b in {1,2,3}.
struct TiAssignment {
  std::vector<TiNodeType> node_types;
  Eigen::MatrixXi y;                  // V x L, one type per vertex
  std::array<Eigen::MatrixXi, 3> a;   // per bond type, V x V symmetric

  int num_vertices() const { return static_cast<int>(y.rows()); }
  int num_types() const { return static_cast<int>(node_types.size()); }

  /// Enforces the type invariants (binary entries, one type per vertex,
  /// symmetry, at most one bond type per pair). Throws InvalidArgument.
  void validate() const;
};

/// Derives an assignment from an explicit molecular graph; node types are
/// generated from the distinct (color, bond-profile) combinations plus one
/// dummy type. Aromatic bonds are outside this formulation.
TiAssignment ti_assignment_from_graph(const MolecularGraph &g);

struct TiFeasibilityReport {
  std::vector<CheckLine> check_lines;
  bool ok() const;
  std::vector<CheckLine> checks() const { return check_lines; }
};

/// Per-vertex per-bond-type valence balances plus the lower-index
/// connectivity condition. Report-style: never throws on violations.
TiFeasibilityReport check_ti_feasibility(const TiAssignment &t);

// ---------------------------------------------------------------------------
// Signature-descriptor feasibility
// ---------------------------------------------------------------------------

/// Structural summary of one parsed signature string. Children rendered from
/// implicit hydrogens ("H"-prefixed colors) are not part of the heavy-atom
/// constraint data.
struct SignatureShape {
  std::string root_color;
  int bond_class = 0;        // sum of child bond orders (the S_k class)
  int double_children = 0;   // B_D1 / B_D2 membership
  int triple_children = 0;   // B_T1 membership
  std::map<std::string, int> child_colors;  // coloring sequences root -> child
  /// Per child color: children whose color-encoded degree is >= the root's
  /// (the omega qualifier). Colors without a trailing degree never qualify.
  std::map<std::string, int> omega;
  int depth = 0;
};

SignatureShape parse_signature_shape(const std::string &signature);

struct SdConstraintData {
  int height = 1;
  RingCounts rings;
  std::map<std::string, SignatureShape> shapes;
};

/// Parses every signature and collects the constraint data. Throws
/// HeightMismatch when a signature is deeper than the declared height.
SdConstraintData derive_sd_constraints(
    const std::vector<std::string> &signatures, int height, RingCounts rings);

struct SdFeasibilityReport {
  std::vector<CheckLine> check_lines;
  bool ok() const;
  std::vector<CheckLine> checks() const { return check_lines; }
};

/// Handshaking-lemma balance, coloring-sequence balance for every ordered
/// color pair, even parity of self-sequences, and parent availability.
SdFeasibilityReport check_sd_feasibility(const DescriptorVector &n,
                                         const SdConstraintData &data);

}  // namespace camd

#endif  // CAMD_FEASIBILITY_HPP
