//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_ASSEMBLE_HPP
#define CAMD_ASSEMBLE_HPP

#include <vector>

#include "camd/descriptor.hpp"
#include "camd/graph.hpp"
#include "camd/group.hpp"

namespace camd {

struct AssemblyResult {
  std::vector<MolecularGraph> structures;  // deduplicated, sorted by label
  bool truncated = false;
};

/// Enumerates the connected molecules formed by pairing the open valences of
/// the group multiset `n` with single bonds (groups always bond to other
/// groups, never back into themselves). Results are deduplicated by
/// canonical label and returned in label order, truncated at `max_results`.
/// Throws NoAssembly when the counts admit no connected pairing.
AssemblyResult assemble_structures(const DescriptorVector &n,
                                   const GroupLibrary &lib, int max_results);

}  // namespace camd

#endif  // CAMD_ASSEMBLE_HPP
