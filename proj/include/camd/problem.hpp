//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_PROBLEM_HPP
#define CAMD_PROBLEM_HPP

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camd/descriptor.hpp"
#include "camd/gc.hpp"
#include "camd/graph.hpp"
#include "camd/group.hpp"

namespace camd {

/// Property models over descriptor counts share the GC form.
using PropertyModel = GcModel;
using PropertyMap = std::map<std::string, double>;

struct Bounds {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

struct IntBounds {
  int lo = 0;
  int hi = -1;  // negative = default (the total upper bound)
};

enum class ObjectiveMode { Feasibility, Direct, Target };
enum class DeviationType { Absolute, Squared };

struct TargetSpec {
  std::string property;
  double value = 0.0;
  double weight = 1.0;
};

struct LinearTerm {
  std::string property;
  double coeff = 1.0;
};

struct QuadraticTerm {
  std::string property;
  double weight = 1.0;
  double center = 0.0;
};

using DirectFn =
    std::function<double(const DescriptorVector &, const PropertyMap &)>;

/// Objective selection. Target mode minimizes the weighted deviation from
/// property targets (absolute by default, squared available). Direct mode
/// combines linear and convex quadratic terms in the properties; a custom
/// callback may replace them at the cost of provable bounds.
struct ObjectiveSpec {
  ObjectiveMode mode = ObjectiveMode::Feasibility;
  // target mode
  std::vector<TargetSpec> targets;
  DeviationType deviation = DeviationType::Absolute;
  // direct mode
  bool maximize = false;
  std::vector<LinearTerm> linear;
  std::vector<QuadraticTerm> quadratic;
  DirectFn custom;
};

struct UserConstraint {
  std::string name;
  bool equality = false;  // h2 = 0 within 1e-6; otherwise h1 <= 0
  std::function<double(const DescriptorVector &, const PropertyMap &)> fn;
};

/// Single-molecule design problem over a group library.
struct DesignProblem {
  GroupLibrary library;
  std::vector<PropertyModel> models;
  std::map<std::string, Bounds> property_bounds;
  std::map<std::string, IntBounds> descriptor_bounds;
  int total_lower = 2;  // N^L, "typically equal to 2"
  int total_upper = 8;  // N^U
  std::map<std::string, int> fixed_minimum;  // D^FIX
  ObjectiveSpec objective;
  std::vector<UserConstraint> user_constraints;
  std::optional<int> ring_parameter;  // fix m; otherwise -1, 0, 1 are tried
  long long enumeration_cap = 20'000'000;

  /// Sorted descriptor ids (library group names).
  std::vector<std::string> descriptor_ids() const;
  /// Effective per-descriptor bounds with fixed minima folded in.
  std::pair<int, int> bounds_for(const std::string &id) const;
  std::vector<int> allowed_ring_parameters() const;

  void validate() const;  // throws InconsistentBounds / InvalidArgument
};

enum class Optimality { Proven, Heuristic, Enumerated };

std::string_view optimality_token(Optimality o);

struct Deviation {
  double plus = 0.0;
  double minus = 0.0;
};

struct DesignSolution {
  DescriptorVector n;
  PropertyMap p;
  double objective = 0.0;
  Optimality optimality = Optimality::Enumerated;
  int m = -1;  // ring parameter the structural check passed with
  std::map<std::string, Deviation> deviations;  // target mode certificate
  std::vector<MolecularGraph> structures;
  // mixtures
  std::vector<DesignSolution> components;
  std::vector<double> x;
  PropertyMap q;
  // process problems
  PropertyMap mu;
  double relaxation_bound = std::numeric_limits<double>::quiet_NaN();
};

using MixingFn = std::function<PropertyMap(double x, const PropertyMap &p1,
                                           const PropertyMap &p2)>;

/// Binary mixture design. With one base problem both components share it.
struct MixtureProblem {
  std::vector<DesignProblem> bases;
  int component_count = 2;
  std::vector<TargetSpec> q_targets;
  DeviationType deviation = DeviationType::Absolute;
  std::map<std::string, Bounds> q_bounds;
  MixingFn mixing;  // empty = ideal linear per property
};

using ProcessFn = std::function<double(const PropertyMap &p,
                                       const PropertyMap &mu)>;

struct ProcessProblem {
  std::vector<std::string> mu_names;
  std::map<std::string, Bounds> mu_bounds;
  ProcessFn process_fn;
  std::vector<std::function<double(const PropertyMap &, const PropertyMap &)>>
      inequalities;  // <= 0
};

// --- shared evaluation helpers ---

/// Evaluates every property model on n.
PropertyMap evaluate_properties(const DesignProblem &problem,
                                const DescriptorVector &n);

/// Full feasibility: bounds, structural checks over the allowed ring
/// parameters, property bounds and user constraints. On success fills the
/// passing m and the property map.
bool feasible_point(const DesignProblem &problem, const DescriptorVector &n,
                    PropertyMap *p_out = nullptr, int *m_out = nullptr);

/// User-facing objective value (unnegated even when maximizing).
double objective_value(const DesignProblem &problem, const DescriptorVector &n,
                       const PropertyMap &p);

/// Internal score the solvers minimize: objective_value negated when the
/// direct objective maximizes.
double objective_score(const DesignProblem &problem, const DescriptorVector &n,
                       const PropertyMap &p);

std::map<std::string, Deviation> target_deviations(const DesignProblem &problem,
                                                   const PropertyMap &p);

}  // namespace camd

#endif  // CAMD_PROBLEM_HPP
