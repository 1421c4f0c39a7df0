//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/elements.hpp"

#include <array>

#include "camd/error.hpp"

namespace camd {

namespace {

constexpr int kNumElements = 12;

const std::array<ElementInfo, kNumElements> kElements = {{
    {"B", 5, 3, 3},
    {"C", 6, 4, 4},
    {"N", 7, 5, 3},
    {"O", 8, 6, 2},
    {"F", 9, 7, 1},
    {"Si", 14, 4, 4},
    {"P", 15, 5, 3},
    {"S", 16, 6, 2},
    {"Cl", 17, 7, 1},
    {"Br", 35, 7, 1},
    {"I", 53, 7, 1},
    {"H", 1, 1, 1},  // never a graph vertex; kept for coloring rules
}};

const ElementInfo *find(std::string_view symbol) {
  for (const auto &e : kElements) {
    if (e.symbol == symbol) return &e;
  }
  return nullptr;
}

}  // namespace

const ElementInfo &element_info(std::string_view symbol) {
  const ElementInfo *e = find(symbol);
  if (e == nullptr) {
    throw Error(ErrorCode::UnknownElement,
                "unsupported element symbol '" + std::string(symbol) + "'");
  }
  return *e;
}

bool element_known(std::string_view symbol) { return find(symbol) != nullptr; }

}  // namespace camd
