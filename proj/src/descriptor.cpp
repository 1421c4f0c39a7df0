//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/descriptor.hpp"

#include <algorithm>
#include <set>

#include "camd/error.hpp"

namespace camd {

DescriptorVector::DescriptorVector(std::map<std::string, int> counts) {
  for (auto &[id, c] : counts) set(id, c);
}

int DescriptorVector::get(const std::string &id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

void DescriptorVector::set(const std::string &id, int count) {
  if (count < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "negative descriptor count for '" + id + "'");
  }
  if (count == 0) {
    counts_.erase(id);
  } else {
    counts_[id] = count;
  }
}

void DescriptorVector::add(const std::string &id, int delta) {
  set(id, get(id) + delta);
}

long long DescriptorVector::total() const {
  long long t = 0;
  for (const auto &[id, c] : counts_) t += c;
  return t;
}

DescriptorVector DescriptorVector::operator+(
    const DescriptorVector &other) const {
  DescriptorVector out = *this;
  for (const auto &[id, c] : other.counts_) out.add(id, c);
  return out;
}

bool DescriptorVector::lex_less(const DescriptorVector &a,
                                const DescriptorVector &b) {
  std::set<std::string> keys;
  for (const auto &[id, c] : a.counts_) keys.insert(id);
  for (const auto &[id, c] : b.counts_) keys.insert(id);
  for (const auto &id : keys) {
    int av = a.get(id), bv = b.get(id);
    if (av != bv) return av < bv;
  }
  return false;
}

std::string DescriptorVector::to_string() const {
  std::string out;
  for (const auto &[id, c] : counts_) {
    if (!out.empty()) out += ',';
    out += id + "=" + std::to_string(c);
  }
  return out;
}

}  // namespace camd
