//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/gc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "camd/error.hpp"

namespace camd {

double apply_transform(const TransformSpec &f, double inner) {
  switch (f.kind) {
    case Transform::Identity:
      return inner;
    case Transform::Exp:
      return std::exp(inner);
    case Transform::Log:
      if (inner <= 0.0)
        throw Error(ErrorCode::TransformDomain,
                    "log transform of non-positive inner sum");
      return std::log(inner);
    case Transform::Reciprocal:
      if (inner == 0.0)
        throw Error(ErrorCode::TransformDomain, "reciprocal of zero");
      return 1.0 / inner;
    case Transform::Affine:
      return f.a * inner + f.b;
  }
  throw Error(ErrorCode::Internal, "unreachable transform kind");
}

double invert_transform(const TransformSpec &f, double value) {
  switch (f.kind) {
    case Transform::Identity:
      return value;
    case Transform::Exp:
      if (value <= 0.0)
        throw Error(ErrorCode::TransformDomain,
                    "exp transform cannot produce a non-positive value");
      return std::log(value);
    case Transform::Log:
      return std::exp(value);
    case Transform::Reciprocal:
      if (value == 0.0)
        throw Error(ErrorCode::TransformDomain, "reciprocal of zero");
      return 1.0 / value;
    case Transform::Affine:
      if (f.a == 0.0)
        throw Error(ErrorCode::TransformDomain,
                    "affine transform with zero slope is not invertible");
      return (value - f.b) / f.a;
  }
  throw Error(ErrorCode::Internal, "unreachable transform kind");
}

namespace {

double interaction_sum(const GcModel &model, const DescriptorVector &n) {
  double sum = 0.0;
  for (const InteractionTerm &term : model.interactions) {
    double ng = n.get(term.g);
    double ngp = n.get(term.g_prime);
    double value = 0.0;
    switch (term.combiner) {
      case InteractionCombiner::Product: value = ng * ngp; break;
      case InteractionCombiner::Min: value = std::min(ng, ngp); break;
      case InteractionCombiner::IndicatorBothPresent:
        value = (ng > 0 && ngp > 0) ? 1.0 : 0.0;
        break;
    }
    sum += term.coefficient * value;
  }
  return sum;
}

void require_known(const GcModel &model, const DescriptorVector &n) {
  for (const auto &[id, count] : n.counts()) {
    if (!model.coefficients.count(id))
      throw Error(ErrorCode::UnknownGroup,
                  "model '" + model.property_name +
                      "' has no coefficient for '" + id + "'");
  }
}

}  // namespace

double estimate_gc(const GcModel &model, const DescriptorVector &n) {
  require_known(model, n);
  double inner = 0.0;
  for (const auto &[id, count] : n.counts())
    inner += model.coefficients.at(id) * count;
  inner += interaction_sum(model, n);
  return apply_transform(model.transform, inner);
}

double estimate_gcplus(const GcModel &model, const DescriptorVector &n_first,
                       const DescriptorVector &n_second,
                       const DescriptorVector &n_third) {
  if (!model.level_sets)
    throw Error(ErrorCode::LevelMismatch,
                "model '" + model.property_name + "' declares no level sets");
  const LevelSets &levels = *model.level_sets;
  auto check_level = [&](const DescriptorVector &n,
                         const std::set<std::string> &level,
                         const char *name) {
    for (const auto &[id, count] : n.counts()) {
      if (!level.count(id))
        throw Error(ErrorCode::LevelMismatch,
                    "group '" + id + "' is not in level " + name);
    }
  };
  check_level(n_first, levels.first, "F");
  check_level(n_second, levels.second, "S");
  check_level(n_third, levels.third, "T");

  DescriptorVector merged = n_first + n_second + n_third;
  require_known(model, merged);
  double inner = 0.0;
  for (const auto &[id, count] : merged.counts())
    inner += model.coefficients.at(id) * count;
  inner += interaction_sum(model, merged);
  return apply_transform(model.transform, inner);
}

GcFit fit_coefficients(
    const std::vector<std::pair<DescriptorVector, double>> &dataset,
    const TransformSpec &transform, std::string property_name) {
  std::set<std::string> ids;
  for (const auto &[n, p] : dataset)
    for (const auto &[id, count] : n.counts()) ids.insert(id);
  const int rows = static_cast<int>(dataset.size());
  const int cols = static_cast<int>(ids.size());
  if (cols == 0)
    throw Error(ErrorCode::InvalidArgument, "dataset has no descriptors");
  if (rows < cols)
    throw Error(ErrorCode::Underdetermined,
                std::to_string(rows) + " rows for " + std::to_string(cols) +
                    " descriptors");

  std::vector<std::string> columns(ids.begin(), ids.end());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c)
      design(r, c) = dataset[r].first.get(columns[c]);
    target(r) = invert_transform(transform, dataset[r].second);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols)
    throw Error(ErrorCode::SingularDesignMatrix,
                "design matrix rank " + std::to_string(qr.rank()) + " < " +
                    std::to_string(cols));
  Eigen::VectorXd solution = qr.solve(target);

  GcFit fit;
  fit.model.property_name = std::move(property_name);
  fit.model.transform = transform;
  for (int c = 0; c < cols; ++c)
    fit.model.coefficients[columns[c]] = solution(c);
  fit.residual_norm = (design * solution - target).norm();
  return fit;
}

}  // namespace camd
