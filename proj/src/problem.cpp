//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/problem.hpp"

#include <algorithm>
#include <cmath>

#include "camd/error.hpp"
#include "camd/feasibility.hpp"

namespace camd {

std::string_view optimality_token(Optimality o) {
  switch (o) {
    case Optimality::Proven: return "proven";
    case Optimality::Heuristic: return "heuristic";
    case Optimality::Enumerated: return "enumerated";
  }
  return "?";
}

std::vector<std::string> DesignProblem::descriptor_ids() const {
  return library.names();
}

std::pair<int, int> DesignProblem::bounds_for(const std::string &id) const {
  int lo = 0;
  int hi = total_upper;
  auto it = descriptor_bounds.find(id);
  if (it != descriptor_bounds.end()) {
    lo = it->second.lo;
    if (it->second.hi >= 0) hi = std::min(hi, it->second.hi);
  }
  auto fixed = fixed_minimum.find(id);
  if (fixed != fixed_minimum.end()) lo = std::max(lo, fixed->second);
  return {lo, hi};
}

std::vector<int> DesignProblem::allowed_ring_parameters() const {
  if (ring_parameter) return {*ring_parameter};
  return {-1, 0, 1};
}

void DesignProblem::validate() const {
  if (library.size() == 0)
    throw Error(ErrorCode::InvalidArgument, "problem needs a group library");
  if (total_lower < 0 || total_upper < total_lower)
    throw Error(ErrorCode::InconsistentBounds,
                "total bounds: N^L=" + std::to_string(total_lower) +
                    " N^U=" + std::to_string(total_upper));
  for (const auto &[id, b] : descriptor_bounds) {
    library.at(id);
    if (b.lo < 0 || (b.hi >= 0 && b.hi < b.lo))
      throw Error(ErrorCode::InconsistentBounds,
                  "descriptor bounds for '" + id + "'");
  }
  for (const auto &[id, minimum] : fixed_minimum) {
    library.at(id);
    auto [lo, hi] = bounds_for(id);
    if (minimum > hi)
      throw Error(ErrorCode::InconsistentBounds,
                  "fixed minimum for '" + id + "' exceeds its upper bound");
  }
  std::vector<std::string> property_names;
  for (const PropertyModel &model : models) {
    if (std::find(property_names.begin(), property_names.end(),
                  model.property_name) != property_names.end())
      throw Error(ErrorCode::DuplicateName,
                  "duplicate property model '" + model.property_name + "'");
    property_names.push_back(model.property_name);
    for (const std::string &id : library.names()) {
      if (!model.coefficients.count(id))
        throw Error(ErrorCode::InvalidArgument,
                    "model '" + model.property_name +
                        "' lacks a coefficient for group '" + id + "'");
    }
  }
  auto known_property = [&](const std::string &name) {
    return std::find(property_names.begin(), property_names.end(), name) !=
           property_names.end();
  };
  for (const auto &[name, b] : property_bounds) {
    if (!known_property(name))
      throw Error(ErrorCode::InvalidArgument,
                  "property bound on unknown property '" + name + "'");
    if (b.lo > b.hi)
      throw Error(ErrorCode::InconsistentBounds,
                  "property bounds for '" + name + "'");
  }
  for (const TargetSpec &t : objective.targets) {
    if (!known_property(t.property))
      throw Error(ErrorCode::InvalidArgument,
                  "target on unknown property '" + t.property + "'");
    if (t.weight < 0)
      throw Error(ErrorCode::InvalidArgument, "target weights must be >= 0");
  }
  for (const LinearTerm &t : objective.linear)
    if (!known_property(t.property))
      throw Error(ErrorCode::InvalidArgument,
                  "objective references unknown property '" + t.property +
                      "'");
  for (const QuadraticTerm &t : objective.quadratic)
    if (!known_property(t.property))
      throw Error(ErrorCode::InvalidArgument,
                  "objective references unknown property '" + t.property +
                      "'");
  if (objective.mode == ObjectiveMode::Target && objective.targets.empty())
    throw Error(ErrorCode::InvalidArgument, "target mode without targets");
  if (objective.mode == ObjectiveMode::Direct && objective.linear.empty() &&
      objective.quadratic.empty() && !objective.custom)
    throw Error(ErrorCode::InvalidArgument, "direct mode without an objective");
}

PropertyMap evaluate_properties(const DesignProblem &problem,
                                const DescriptorVector &n) {
  PropertyMap p;
  for (const PropertyModel &model : problem.models)
    p[model.property_name] = estimate_gc(model, n);
  return p;
}

bool feasible_point(const DesignProblem &problem, const DescriptorVector &n,
                    PropertyMap *p_out, int *m_out) {
  long long total = n.total();
  if (total < problem.total_lower || total > problem.total_upper) return false;
  for (const std::string &id : problem.descriptor_ids()) {
    auto [lo, hi] = problem.bounds_for(id);
    int count = n.get(id);
    if (count < lo || count > hi) return false;
  }
  int m_used = 0;
  bool structural = false;
  for (int m : problem.allowed_ring_parameters()) {
    if (check_gc_basic(n, problem.library, m).ok()) {
      structural = true;
      m_used = m;
      break;
    }
  }
  if (!structural) return false;

  PropertyMap p;
  try {
    p = evaluate_properties(problem, n);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::TransformDomain) return false;
    throw;
  }
  for (const auto &[name, bounds] : problem.property_bounds) {
    double value = p.at(name);
    if (value < bounds.lo || value > bounds.hi) return false;
  }
  for (const UserConstraint &c : problem.user_constraints) {
    double value = c.fn(n, p);
    if (c.equality ? std::abs(value) > 1e-6 : value > 0.0) return false;
  }
  if (p_out) *p_out = std::move(p);
  if (m_out) *m_out = m_used;
  return true;
}

double objective_value(const DesignProblem &problem, const DescriptorVector &n,
                       const PropertyMap &p) {
  const ObjectiveSpec &obj = problem.objective;
  switch (obj.mode) {
    case ObjectiveMode::Feasibility:
      return 0.0;
    case ObjectiveMode::Target: {
      double sum = 0.0;
      for (const TargetSpec &t : obj.targets) {
        double deviation = std::abs(t.value - p.at(t.property));
        if (obj.deviation == DeviationType::Squared)
          deviation = deviation * deviation;
        sum += t.weight * deviation;
      }
      return sum;
    }
    case ObjectiveMode::Direct: {
      if (obj.custom) return obj.custom(n, p);
      double sum = 0.0;
      for (const LinearTerm &t : obj.linear) sum += t.coeff * p.at(t.property);
      for (const QuadraticTerm &t : obj.quadratic) {
        double d = p.at(t.property) - t.center;
        sum += t.weight * d * d;
      }
      return sum;
    }
  }
  throw Error(ErrorCode::Internal, "unreachable objective mode");
}

double objective_score(const DesignProblem &problem, const DescriptorVector &n,
                       const PropertyMap &p) {
  double value = objective_value(problem, n, p);
  if (problem.objective.mode == ObjectiveMode::Direct &&
      problem.objective.maximize)
    return -value;
  return value;
}

std::map<std::string, Deviation> target_deviations(
    const DesignProblem &problem, const PropertyMap &p) {
  std::map<std::string, Deviation> out;
  for (const TargetSpec &t : problem.objective.targets) {
    double gap = t.value - p.at(t.property);  // d+ - d- = p^T - p
    Deviation d;
    if (gap >= 0)
      d.plus = gap;
    else
      d.minus = -gap;
    out[t.property] = d;
  }
  return out;
}

}  // namespace camd
