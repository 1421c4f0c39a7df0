//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_GC_HPP
#define CAMD_GC_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "camd/descriptor.hpp"

namespace camd {

enum class Transform { Identity, Exp, Log, Reciprocal, Affine };

struct TransformSpec {
  Transform kind = Transform::Identity;
  double a = 1.0;  // affine slope
  double b = 0.0;  // affine offset

  bool operator==(const TransformSpec &) const = default;
};

/// Applies f to the inner sum. Throws TransformDomain outside the domain
/// (log of a non-positive sum, reciprocal of zero).
double apply_transform(const TransformSpec &f, double inner);

/// Inverse of apply_transform, used when fitting coefficients.
double invert_transform(const TransformSpec &f, double value);

enum class InteractionCombiner { Product, Min, IndicatorBothPresent };

struct InteractionTerm {
  std::string g;
  std::string g_prime;  // may equal g (self-interaction)
  double coefficient = 0.0;
  InteractionCombiner combiner = InteractionCombiner::Product;
};

struct LevelSets {
  std::set<std::string> first;   // F
  std::set<std::string> second;  // S
  std::set<std::string> third;   // T
};

/// Group-contribution property model: P = f(sum_g c_g n_g + interactions).
struct GcModel {
  std::string property_name;
  std::map<std::string, double> coefficients;
  TransformSpec transform;
  std::optional<LevelSets> level_sets;
  std::vector<InteractionTerm> interactions;
};

/// Linear / transformed GC estimate. `n` keys must be model groups.
double estimate_gc(const GcModel &model, const DescriptorVector &n);

/// Three-level estimate: one transformed sum over F, S and T counts. The
/// level counts are taken as supplied; S and T may overlap structurally.
double estimate_gcplus(const GcModel &model, const DescriptorVector &n_first,
                       const DescriptorVector &n_second,
                       const DescriptorVector &n_third);

struct GcFit {
  GcModel model;
  double residual_norm = 0.0;
};

/// Ordinary least squares of coefficients on transform^-1(P).
GcFit fit_coefficients(
    const std::vector<std::pair<DescriptorVector, double>> &dataset,
    const TransformSpec &transform, std::string property_name = "fitted");

}  // namespace camd

#endif  // CAMD_GC_HPP
