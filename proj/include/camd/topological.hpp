//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_TOPOLOGICAL_HPP
#define CAMD_TOPOLOGICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "camd/graph.hpp"

namespace camd {

/// Topological-index summary of a molecular graph. All values are invariant
/// under vertex relabeling. Kappa entries appear only where defined.
struct TiReport {
  double wiener = 0.0;
  std::map<int, double> chi;               // order -> value
  std::map<int, double> chi_valence;       // valence-corrected
  std::map<int, long long> path_counts;    // ^iP, paths counted once
  std::map<int, double> kappa;             // orders 1..3

  /// Ordered "key=value" lines, floats to 6 decimals.
  std::vector<std::string> to_lines() const;
};

/// Half the sum of all pairwise graph distances.
double wiener_index(const MolecularGraph &g);

/// Randic edge index 1/sqrt(delta_v * delta_w) for an existing edge.
double edge_ci(const MolecularGraph &g, int v, int w);

/// Connectivity index of the given order. Order 0 sums 1/sqrt(delta) over
/// vertices; order 1 over edges; order i >= 2 over simple paths of i+1
/// vertices (path-type convention). Throws IsolatedVertex if any delta is 0.
double chi(const MolecularGraph &g, int order);

/// Valence-corrected vertex degree: Z^V - h for second-period elements,
/// (Z^V - h)/(Z - Z^V - 1) beyond.
double valence_delta(const VertexColor &v);

/// chi with valence_delta in place of the plain degree.
double chi_valence(const MolecularGraph &g, int order);

/// Number of simple paths with `length` edges, each counted once (length 0
/// counts vertices).
long long path_count(const MolecularGraph &g, int length);

/// Kier-style shape index for orders 1..3. Throws UndefinedKappa when the
/// path count vanishes or the graph is too small.
double kappa(const MolecularGraph &g, int order);

TiReport compute_ti_report(const MolecularGraph &g, int max_order = 3);

}  // namespace camd

#endif  // CAMD_TOPOLOGICAL_HPP
