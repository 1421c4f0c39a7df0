//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_ELEMENTS_HPP
#define CAMD_ELEMENTS_HPP

#include <string>
#include <string_view>

namespace camd {

struct ElementInfo {
  std::string symbol;
  int atomic_number;      // Z
  int valence_electrons;  // Z^V
  int standard_valence;   // bonds a neutral atom forms, hydrogens included
};

/// Looks up a supported main-group element. Throws UnknownElement.
const ElementInfo &element_info(std::string_view symbol);

bool element_known(std::string_view symbol);

}  // namespace camd

#endif  // CAMD_ELEMENTS_HPP
