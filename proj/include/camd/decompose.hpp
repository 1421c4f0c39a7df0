//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_DECOMPOSE_HPP
#define CAMD_DECOMPOSE_HPP

#include "camd/descriptor.hpp"
#include "camd/graph.hpp"
#include "camd/group.hpp"

namespace camd {

/// Decomposes a molecule into a non-overlapping exact cover of its heavy
/// atoms by library fragments (first-order GC convention). Groups join each
/// other through single or aromatic bonds only; fragment-internal edges must
/// reproduce the molecule's bonds exactly.
///
/// When several covers exist the lexicographically smallest one by sorted
/// group names is returned; with `require_unique` set, multiple distinct
/// count vectors raise AmbiguousCover instead. Raises NoCover when the
/// library cannot tile the molecule.
DescriptorVector decompose_into_groups(const MolecularGraph &g,
                                       const GroupLibrary &lib,
                                       bool require_unique = false);

}  // namespace camd

#endif  // CAMD_DECOMPOSE_HPP
