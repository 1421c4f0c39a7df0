//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_DESCRIPTOR_HPP
#define CAMD_DESCRIPTOR_HPP

#include <map>
#include <string>
#include <vector>

namespace camd {

/// Sparse occurrence-count vector over a descriptor index set (group names,
/// node types, or signature strings). Absent key reads as zero; counts are
/// never negative.
class DescriptorVector {
 public:
  DescriptorVector() = default;
  explicit DescriptorVector(std::map<std::string, int> counts);

  int get(const std::string &id) const;
  void set(const std::string &id, int count);
  void add(const std::string &id, int delta);

  long long total() const;
  bool empty() const { return counts_.empty(); }

  const std::map<std::string, int> &counts() const { return counts_; }

  DescriptorVector operator+(const DescriptorVector &other) const;

  bool operator==(const DescriptorVector &other) const {
    return counts_ == other.counts_;
  }

  /// Lexicographic order over the union of keys (sorted by id, missing = 0).
  static bool lex_less(const DescriptorVector &a, const DescriptorVector &b);

  /// "id=count" pairs joined with commas, keys sorted; zero entries skipped.
  std::string to_string() const;

 private:
  std::map<std::string, int> counts_;  // zero entries dropped
};

}  // namespace camd

#endif  // CAMD_DESCRIPTOR_HPP
