//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_IO_HPP
#define CAMD_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "camd/feasibility.hpp"
#include "camd/gc.hpp"
#include "camd/graph.hpp"
#include "camd/group.hpp"
#include "camd/problem.hpp"
#include "camd/signature.hpp"

namespace camd {

// All files are line-oriented plain text; `#` starts a comment. Parse errors
// carry the file name and line number.

/// Graph file: `atoms N edges M rings A L`, then one `idx element
/// open_valence h_count tag` line per atom and one `v w order` line per edge.
MolecularGraph parse_graph_file(const std::string &path);
MolecularGraph parse_graph_text(std::istream &in, const std::string &origin);
std::string write_graph_text(const MolecularGraph &g);

/// Same syntax as a graph file with the full-valence requirement relaxed.
Fragment parse_fragment_file(const std::string &path);

/// Library rows: `name phi_ali phi_arom aromatic_atoms rho fragment_ref`;
/// fragment paths resolve against the library file, `-` means none.
GroupLibrary parse_group_library(const std::string &path);

/// Descriptor counts: `id count` rows.
DescriptorVector parse_counts_file(const std::string &path);

/// GC model: `property`/`transform` headers, then `groups` rows
/// `name level coefficient` (level F, S, T or -) terminated by `end`, and an
/// optional `interactions` table `g g_prime combiner coefficient`.
GcModel parse_gc_model_file(const std::string &path);

/// SD model: `property` header plus a `signatures` table
/// `height signature coefficient`.
SdModel parse_sd_model_file(const std::string &path);

/// TI assignment: `types L` rows `name delta phi1 phi2 phi3 flag`,
/// `vertices V` rows `index type-name` (1-based), `bonds M` rows `v w b`.
TiAssignment parse_ti_assignment_file(const std::string &path);

struct ParsedProblem {
  DesignProblem base;
  std::optional<MixtureProblem> mixture;
  std::optional<ProcessProblem> process;
  uint64_t seed = 0;
};

/// Problem file sections: `library`, `model`, bounds (`total`, `nbound`,
/// `pbound`, `fixed`, `m`), `objective` plus its terms, and optional
/// `mixture begin/end` and `process begin/end` blocks. The exact grammar is
/// documented in the README.
ParsedProblem parse_problem(const std::string &path);

}  // namespace camd

#endif  // CAMD_IO_HPP
