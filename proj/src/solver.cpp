//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "camd/error.hpp"
#include "camd/feasibility.hpp"

namespace camd {

namespace {

struct Box {
  std::vector<std::string> ids;
  std::vector<int> lo, hi;

  static Box of(const DesignProblem &problem) {
    Box box;
    box.ids = problem.descriptor_ids();
    for (const std::string &id : box.ids) {
      auto [lo, hi] = problem.bounds_for(id);
      box.lo.push_back(lo);
      box.hi.push_back(hi);
    }
    return box;
  }

  long long cell_count() const {
    long long cells = 1;
    for (size_t i = 0; i < ids.size(); ++i) {
      cells *= hi[i] - lo[i] + 1;
      if (cells < 0 || cells > (1LL << 62)) return -1;  // overflow guard
    }
    return cells;
  }

  DescriptorVector vector_of(const std::vector<int> &values) const {
    DescriptorVector n;
    for (size_t i = 0; i < ids.size(); ++i)
      if (values[i] > 0) n.set(ids[i], values[i]);
    return n;
  }
};

DesignSolution make_solution(const DesignProblem &problem,
                             const DescriptorVector &n, const PropertyMap &p,
                             int m, Optimality optimality) {
  DesignSolution s;
  s.n = n;
  s.p = p;
  s.m = m;
  s.objective = objective_value(problem, n, p);
  s.optimality = optimality;
  if (problem.objective.mode == ObjectiveMode::Target)
    s.deviations = target_deviations(problem, p);
  return s;
}

void check_cap(const DesignProblem &problem, const Box &box) {
  long long cells = box.cell_count();
  if (cells < 0 || cells > problem.enumeration_cap)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "descriptor box holds " +
                    (cells < 0 ? std::string("too many")
                               : std::to_string(cells)) +
                    " points (cap " +
                    std::to_string(problem.enumeration_cap) + ")");
}

// Walks the integer box in lexicographic order with partial-total pruning.
template <typename Visit>
void walk_box(const DesignProblem &problem, const Box &box, Visit &&visit) {
  const size_t dims = box.ids.size();
  std::vector<int> values(dims, 0);
  std::vector<long long> min_rest(dims + 1, 0), max_rest(dims + 1, 0);
  for (size_t i = dims; i-- > 0;) {
    min_rest[i] = min_rest[i + 1] + box.lo[i];
    max_rest[i] = max_rest[i + 1] + box.hi[i];
  }
  auto rec = [&](auto &&self, size_t dim, long long total) -> void {
    if (dim == dims) {
      visit(values);
      return;
    }
    for (int v = box.lo[dim]; v <= box.hi[dim]; ++v) {
      long long t = total + v;
      if (t + min_rest[dim + 1] > problem.total_upper) break;
      if (t + max_rest[dim + 1] < problem.total_lower) continue;
      values[dim] = v;
      self(self, dim + 1, t);
    }
    values[dim] = box.lo[dim];
  };
  rec(rec, 0, 0);
}

bool linear_models(const DesignProblem &problem) {
  for (const PropertyModel &model : problem.models) {
    if (model.transform.kind != Transform::Identity) return false;
    if (!model.interactions.empty()) return false;
  }
  return true;
}

bool bnb_eligible(const DesignProblem &problem) {
  if (!linear_models(problem)) return false;
  const ObjectiveSpec &obj = problem.objective;
  if (obj.mode == ObjectiveMode::Target) return true;
  if (obj.mode == ObjectiveMode::Direct) {
    if (obj.custom) return false;
    for (const QuadraticTerm &t : obj.quadratic)
      if (t.weight < 0) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// exhaustive scan (also the fallback when bounds are unavailable)
// ---------------------------------------------------------------------------

std::vector<DesignSolution> scan_all(const DesignProblem &problem,
                                     bool keep_all,
                                     Optimality optimality) {
  Box box = Box::of(problem);
  check_cap(problem, box);
  std::vector<DesignSolution> out;
  bool have_best = false;
  double best_score = 0.0;
  walk_box(problem, box, [&](const std::vector<int> &values) {
    DescriptorVector n = box.vector_of(values);
    PropertyMap p;
    int m = 0;
    if (!feasible_point(problem, n, &p, &m)) return;
    if (keep_all) {
      out.push_back(make_solution(problem, n, p, m, optimality));
      return;
    }
    double score = objective_score(problem, n, p);
    if (!have_best || score < best_score) {
      have_best = true;
      best_score = score;
      out.assign(1, make_solution(problem, n, p, m, optimality));
    }
    // ties keep the earlier (lexicographically smaller) point
  });
  return out;
}

// ---------------------------------------------------------------------------
// branch and bound
// ---------------------------------------------------------------------------

struct Interval {
  double lo = 0.0, hi = 0.0;
};

double interval_distance(double point, const Interval &iv) {
  if (point < iv.lo) return iv.lo - point;
  if (point > iv.hi) return point - iv.hi;
  return 0.0;
}

struct BnbContext {
  const DesignProblem &problem;
  Box box;
  std::vector<int> order;  // branching order over box indices
  // per property, per box index: coefficient
  std::vector<std::string> property_names;
  std::vector<std::vector<double>> coeff;  // [property][descriptor]
  std::vector<int> phi;                    // aliphatic valence per descriptor
};

BnbContext make_context(const DesignProblem &problem) {
  BnbContext ctx{problem, Box::of(problem), {}, {}, {}, {}};
  const size_t dims = ctx.box.ids.size();
  for (const PropertyModel &model : problem.models) {
    ctx.property_names.push_back(model.property_name);
    std::vector<double> row(dims);
    for (size_t i = 0; i < dims; ++i)
      row[i] = model.coefficients.at(ctx.box.ids[i]);
    ctx.coeff.push_back(std::move(row));
  }
  for (size_t i = 0; i < dims; ++i)
    ctx.phi.push_back(problem.library.at(ctx.box.ids[i]).phi_ali);

  // branch on the descriptor with the largest weighted model coefficients
  std::map<std::string, double> property_weight;
  const ObjectiveSpec &obj = problem.objective;
  for (const TargetSpec &t : obj.targets) property_weight[t.property] += t.weight;
  for (const LinearTerm &t : obj.linear)
    property_weight[t.property] += std::abs(t.coeff);
  for (const QuadraticTerm &t : obj.quadratic)
    property_weight[t.property] += t.weight;

  std::vector<double> score(dims, 0.0);
  for (size_t k = 0; k < ctx.property_names.size(); ++k) {
    double w = 0.0;
    auto it = property_weight.find(ctx.property_names[k]);
    if (it != property_weight.end()) w = it->second;
    for (size_t i = 0; i < dims; ++i)
      score[i] += w * std::abs(ctx.coeff[k][i]);
  }
  ctx.order.resize(dims);
  for (size_t i = 0; i < dims; ++i) ctx.order[i] = static_cast<int>(i);
  std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return ctx.box.ids[a] < ctx.box.ids[b];
  });
  return ctx;
}

struct BnbNode {
  int depth = 0;
  double bound = 0.0;
  long long sequence = 0;
  std::vector<int> values;  // by order position, size = depth
};

struct BnbNodeCompare {
  bool operator()(const BnbNode &a, const BnbNode &b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap
    return a.sequence > b.sequence;
  }
};

/// Lower bound of the score over the sub-box rooted at `node`; also rules
/// the sub-box out when the count or valence-balance intervals are empty.
bool node_bound(const BnbContext &ctx, const BnbNode &node, double *bound) {
  const DesignProblem &problem = ctx.problem;
  const size_t dims = ctx.box.ids.size();
  long long count_lo = 0, count_hi = 0;
  long long balance_lo = 0, balance_hi = 0;
  std::vector<Interval> inner(ctx.coeff.size());

  for (size_t pos = 0; pos < dims; ++pos) {
    int idx = ctx.order[pos];
    int vlo, vhi;
    if (static_cast<int>(pos) < node.depth) {
      vlo = vhi = node.values[pos];
    } else {
      vlo = ctx.box.lo[idx];
      vhi = ctx.box.hi[idx];
    }
    count_lo += vlo;
    count_hi += vhi;
    long long term = ctx.phi[idx] - 2;
    balance_lo += term * (term >= 0 ? vlo : vhi);
    balance_hi += term * (term >= 0 ? vhi : vlo);
    for (size_t k = 0; k < ctx.coeff.size(); ++k) {
      double c = ctx.coeff[k][idx];
      inner[k].lo += c * (c >= 0 ? vlo : vhi);
      inner[k].hi += c * (c >= 0 ? vhi : vlo);
    }
  }

  if (count_hi < problem.total_lower || count_lo > problem.total_upper)
    return false;
  bool balance_possible = false;
  for (int m : problem.allowed_ring_parameters())
    balance_possible |= balance_lo <= 2 * m && 2 * m <= balance_hi;
  if (!balance_possible) return false;

  // clip property intervals by the property bounds (identity transform)
  for (size_t k = 0; k < ctx.property_names.size(); ++k) {
    auto it = problem.property_bounds.find(ctx.property_names[k]);
    if (it == problem.property_bounds.end()) continue;
    inner[k].lo = std::max(inner[k].lo, it->second.lo);
    inner[k].hi = std::min(inner[k].hi, it->second.hi);
    if (inner[k].lo > inner[k].hi) return false;
  }

  auto property_interval = [&](const std::string &name) -> const Interval & {
    for (size_t k = 0; k < ctx.property_names.size(); ++k)
      if (ctx.property_names[k] == name) return inner[k];
    throw Error(ErrorCode::Internal, "unknown property in objective");
  };

  const ObjectiveSpec &obj = problem.objective;
  double value = 0.0;
  if (obj.mode == ObjectiveMode::Target) {
    for (const TargetSpec &t : obj.targets) {
      double d = interval_distance(t.value, property_interval(t.property));
      if (obj.deviation == DeviationType::Squared) d = d * d;
      value += t.weight * d;
    }
  } else {
    // direct, structured; maximize flips the linear sense
    for (const LinearTerm &t : obj.linear) {
      const Interval &iv = property_interval(t.property);
      double c = obj.maximize ? -t.coeff : t.coeff;
      value += c >= 0 ? c * iv.lo : c * iv.hi;
    }
    for (const QuadraticTerm &t : obj.quadratic) {
      const Interval &iv = property_interval(t.property);
      double d = interval_distance(t.center, iv);
      double w = obj.maximize ? -t.weight : t.weight;
      if (w >= 0) {
        value += w * d * d;
      } else {
        // concave term: bound by the farthest corner
        double far = std::max(std::abs(t.center - iv.lo),
                              std::abs(t.center - iv.hi));
        value += w * far * far;
      }
    }
  }
  *bound = value;
  return true;
}

DesignSolution solve_bnb(const DesignProblem &problem) {
  BnbContext ctx = make_context(problem);
  const size_t dims = ctx.box.ids.size();

  std::priority_queue<BnbNode, std::vector<BnbNode>, BnbNodeCompare> queue;
  long long sequence = 0;
  long long expanded = 0;

  bool have_best = false;
  double best_score = 0.0;
  DescriptorVector best_n;
  PropertyMap best_p;
  int best_m = -1;

  auto push = [&](BnbNode node) {
    double bound = 0.0;
    if (!node_bound(ctx, node, &bound)) return;
    if (have_best && bound > best_score) return;
    node.bound = bound;
    node.sequence = ++sequence;
    queue.push(std::move(node));
  };
  push(BnbNode{});

  while (!queue.empty()) {
    BnbNode node = queue.top();
    queue.pop();
    if (have_best && node.bound > best_score) continue;
    if (++expanded > 50'000'000)
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "branch-and-bound exceeded its node budget");
    if (node.depth == static_cast<int>(dims)) {
      std::vector<int> values(dims);
      for (size_t pos = 0; pos < dims; ++pos)
        values[ctx.order[pos]] = node.values[pos];
      DescriptorVector n = ctx.box.vector_of(values);
      PropertyMap p;
      int m = 0;
      if (!feasible_point(problem, n, &p, &m)) continue;
      double score = objective_score(problem, n, p);
      if (!have_best || score < best_score ||
          (score == best_score && DescriptorVector::lex_less(n, best_n))) {
        have_best = true;
        best_score = score;
        best_n = std::move(n);
        best_p = std::move(p);
        best_m = m;
      }
      continue;
    }
    int idx = ctx.order[node.depth];
    for (int v = ctx.box.lo[idx]; v <= ctx.box.hi[idx]; ++v) {
      BnbNode child;
      child.depth = node.depth + 1;
      child.values = node.values;
      child.values.push_back(v);
      push(std::move(child));
    }
  }

  if (!have_best)
    throw Error(ErrorCode::Infeasible, "no feasible descriptor vector");
  return make_solution(problem, best_n, best_p, best_m, Optimality::Proven);
}

DesignSolution best_of_scan(const DesignProblem &problem) {
  std::vector<DesignSolution> best =
      scan_all(problem, /*keep_all=*/false, Optimality::Enumerated);
  if (best.empty())
    throw Error(ErrorCode::Infeasible, "no feasible descriptor vector");
  return best.front();
}

}  // namespace

std::vector<DesignSolution> enumerate_feasible(const DesignProblem &problem) {
  problem.validate();
  return scan_all(problem, /*keep_all=*/true, Optimality::Enumerated);
}

DesignSolution solve_target(const DesignProblem &problem) {
  problem.validate();
  if (problem.objective.mode != ObjectiveMode::Target)
    throw Error(ErrorCode::InvalidArgument,
                "solve_target needs a target objective");
  if (bnb_eligible(problem)) return solve_bnb(problem);
  return best_of_scan(problem);
}

DesignSolution solve_direct(const DesignProblem &problem) {
  problem.validate();
  if (problem.objective.mode != ObjectiveMode::Direct)
    throw Error(ErrorCode::InvalidArgument,
                "solve_direct needs a direct objective");
  if (bnb_eligible(problem)) return solve_bnb(problem);
  return best_of_scan(problem);
}

// ---------------------------------------------------------------------------
// mixtures
// ---------------------------------------------------------------------------

namespace {

PropertyMap ideal_mixing(double x, const PropertyMap &p1,
                         const PropertyMap &p2) {
  PropertyMap q;
  for (const auto &[name, v1] : p1) q[name] = x * v1 + (1 - x) * p2.at(name);
  return q;
}

double mixture_objective(const MixtureProblem &mp, const PropertyMap &q) {
  double sum = 0.0;
  for (const TargetSpec &t : mp.q_targets) {
    double d = std::abs(t.value - q.at(t.property));
    if (mp.deviation == DeviationType::Squared) d = d * d;
    sum += t.weight * d;
  }
  return sum;
}

bool q_within_bounds(const MixtureProblem &mp, const PropertyMap &q) {
  for (const auto &[name, bounds] : mp.q_bounds) {
    auto it = q.find(name);
    if (it == q.end())
      throw Error(ErrorCode::InvalidArgument,
                  "mixture bound on unknown property '" + name + "'");
    if (it->second < bounds.lo || it->second > bounds.hi) return false;
  }
  return true;
}

}  // namespace

DesignSolution solve_mixture(const MixtureProblem &mp) {
  if (mp.component_count != 2)
    throw Error(ErrorCode::InvalidArgument,
                "the built-in mixture driver designs binary mixtures");
  if (mp.bases.empty() || mp.bases.size() > 2)
    throw Error(ErrorCode::InvalidArgument,
                "mixture needs one shared or two per-component base problems");
  if (mp.q_targets.empty())
    throw Error(ErrorCode::InvalidArgument, "mixture needs q targets");

  const DesignProblem &base1 = mp.bases.front();
  const DesignProblem &base2 = mp.bases.back();
  const bool shared = mp.bases.size() == 1;

  std::vector<DesignSolution> candidates1 = enumerate_feasible(base1);
  std::vector<DesignSolution> candidates2 =
      shared ? candidates1 : enumerate_feasible(base2);
  if (candidates1.empty() || candidates2.empty())
    throw Error(ErrorCode::NoCandidates,
                "a component problem has no feasible candidates");

  MixingFn mix = mp.mixing ? mp.mixing : ideal_mixing;

  auto evaluate_x = [&](const PropertyMap &p1, const PropertyMap &p2,
                        double x) -> std::pair<bool, double> {
    PropertyMap q = mix(x, p1, p2);
    if (!q_within_bounds(mp, q)) return {false, 0.0};
    return {true, mixture_objective(mp, q)};
  };

  bool have_best = false;
  double best_obj = 0.0;
  double best_x = 0.0;
  size_t best_i = 0, best_j = 0;

  auto consider_pair = [&](size_t i, size_t j) {
    const PropertyMap &p1 = candidates1[i].p;
    const PropertyMap &p2 = candidates2[j].p;

    // candidate x values: grid + closed-form interpolation roots + refinement
    std::vector<double> seeds;
    for (int k = 0; k <= 100; ++k) seeds.push_back(k / 100.0);
    if (!mp.mixing) {
      for (const TargetSpec &t : mp.q_targets) {
        double a = p1.at(t.property), b = p2.at(t.property);
        if (a != b) {
          double root = (t.value - b) / (a - b);
          if (root >= 0.0 && root <= 1.0) seeds.push_back(root);
        }
      }
    }
    bool local_have = false;
    double local_best = 0.0, local_x = 0.0;
    auto try_x = [&](double x) {
      auto [ok, obj] = evaluate_x(p1, p2, x);
      if (!ok) return;
      if (!local_have || obj < local_best ||
          (obj == local_best && x < local_x)) {
        local_have = true;
        local_best = obj;
        local_x = x;
      }
    };
    for (double x : seeds) try_x(x);
    if (local_have) {
      // golden-section refinement around the best seed
      double lo = std::max(0.0, local_x - 0.01);
      double hi = std::min(1.0, local_x + 0.01);
      const double phi = (std::sqrt(5.0) - 1) / 2;
      double a = lo, b = hi;
      while (b - a > 1e-9) {
        double c = b - phi * (b - a);
        double d = a + phi * (b - a);
        auto [okc, fc] = evaluate_x(p1, p2, c);
        auto [okd, fd] = evaluate_x(p1, p2, d);
        double vc = okc ? fc : std::numeric_limits<double>::infinity();
        double vd = okd ? fd : std::numeric_limits<double>::infinity();
        if (vc <= vd)
          b = d;
        else
          a = c;
      }
      try_x((a + b) / 2);
    }
    if (!local_have) return;
    if (!have_best || local_best < best_obj) {
      have_best = true;
      best_obj = local_best;
      best_x = local_x;
      best_i = i;
      best_j = j;
    }
  };

  for (size_t i = 0; i < candidates1.size(); ++i) {
    size_t j0 = shared ? i : 0;
    for (size_t j = j0; j < candidates2.size(); ++j) consider_pair(i, j);
  }

  if (!have_best)
    throw Error(ErrorCode::Infeasible,
                "no candidate pair satisfies the mixture bounds");

  DesignSolution solution;
  solution.components = {candidates1[best_i], candidates2[best_j]};
  solution.x = {best_x, 1 - best_x};
  solution.q = mix(best_x, candidates1[best_i].p, candidates2[best_j].p);
  solution.objective = best_obj;
  solution.optimality = Optimality::Enumerated;
  solution.n = candidates1[best_i].n;
  solution.p = candidates1[best_i].p;
  return solution;
}

// ---------------------------------------------------------------------------
// process problems (CoMT-style decomposition)
// ---------------------------------------------------------------------------

namespace {

struct CoordinateSpace {
  std::vector<std::string> names;
  std::vector<double> lo, hi;
};

double penalized(const ProcessProblem &pp, const PropertyMap &p,
                 const PropertyMap &mu) {
  double value = pp.process_fn(p, mu);
  for (const auto &g : pp.inequalities) {
    double violation = g(p, mu);
    if (violation > 0) value += 1e8 * violation * violation;
  }
  return value;
}

/// Cyclic coordinate descent with a golden-section line search per
/// coordinate; adequate for the convex demo objectives this stage serves.
std::vector<double> coordinate_search(
    const CoordinateSpace &space,
    const std::function<double(const std::vector<double> &)> &f) {
  std::vector<double> point(space.names.size());
  for (size_t i = 0; i < point.size(); ++i)
    point[i] = (space.lo[i] + space.hi[i]) / 2;
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double current = f(point);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double before = current;
    for (size_t i = 0; i < point.size(); ++i) {
      double a = space.lo[i], b = space.hi[i];
      while (b - a > 1e-9) {
        double c = b - phi * (b - a);
        double d = a + phi * (b - a);
        point[i] = c;
        double fc = f(point);
        point[i] = d;
        double fd = f(point);
        if (fc <= fd)
          b = d;
        else
          a = c;
      }
      point[i] = (a + b) / 2;
      current = f(point);
    }
    if (before - current < 1e-12) break;
  }
  return point;
}

}  // namespace

DesignSolution solve_process(const DesignProblem &problem,
                             const ProcessProblem &pp) {
  problem.validate();
  if (!pp.process_fn)
    throw Error(ErrorCode::InvalidArgument, "process_fn is required");
  for (const std::string &name : pp.mu_names) {
    auto it = pp.mu_bounds.find(name);
    if (it == pp.mu_bounds.end() || !std::isfinite(it->second.lo) ||
        !std::isfinite(it->second.hi))
      throw Error(ErrorCode::InvalidArgument,
                  "process variable '" + name + "' needs finite bounds");
  }

  // stage 1: relax the molecule into its property box
  CoordinateSpace space;
  std::vector<std::string> property_names;
  for (const PropertyModel &model : problem.models) {
    auto it = problem.property_bounds.find(model.property_name);
    if (it == problem.property_bounds.end() || !std::isfinite(it->second.lo) ||
        !std::isfinite(it->second.hi))
      throw Error(ErrorCode::InvalidArgument,
                  "process stage 1 needs finite bounds for property '" +
                      model.property_name + "'");
    property_names.push_back(model.property_name);
    space.names.push_back(model.property_name);
    space.lo.push_back(it->second.lo);
    space.hi.push_back(it->second.hi);
  }
  for (const std::string &name : pp.mu_names) {
    const Bounds &b = pp.mu_bounds.at(name);
    space.names.push_back(name);
    space.lo.push_back(b.lo);
    space.hi.push_back(b.hi);
  }

  auto split = [&](const std::vector<double> &point) {
    PropertyMap p, mu;
    for (size_t i = 0; i < property_names.size(); ++i)
      p[property_names[i]] = point[i];
    for (size_t i = 0; i < pp.mu_names.size(); ++i)
      mu[pp.mu_names[i]] = point[property_names.size() + i];
    return std::make_pair(p, mu);
  };

  std::vector<double> stage1 = coordinate_search(space, [&](const auto &pt) {
    auto [p, mu] = split(pt);
    return penalized(pp, p, mu);
  });
  auto [p_ideal, mu_stage1] = split(stage1);
  double bound = penalized(pp, p_ideal, mu_stage1);

  // stage 2: nearest feasible molecule
  DesignProblem targeting = problem;
  targeting.objective = ObjectiveSpec{};
  targeting.objective.mode = ObjectiveMode::Target;
  targeting.objective.deviation = DeviationType::Absolute;
  for (const std::string &name : property_names)
    targeting.objective.targets.push_back({name, p_ideal.at(name), 1.0});
  DesignSolution molecule;
  try {
    molecule = solve_target(targeting);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::Infeasible)
      throw Error(ErrorCode::Infeasible,
                  std::string("process stage 2: ") + e.what());
    throw;
  }

  // stage 3: re-optimize the process variables for the realized molecule
  CoordinateSpace mu_space;
  for (const std::string &name : pp.mu_names) {
    const Bounds &b = pp.mu_bounds.at(name);
    mu_space.names.push_back(name);
    mu_space.lo.push_back(b.lo);
    mu_space.hi.push_back(b.hi);
  }
  PropertyMap p_real = molecule.p;
  PropertyMap mu_final;
  double final_value;
  if (mu_space.names.empty()) {
    final_value = penalized(pp, p_real, mu_final);
  } else {
    std::vector<double> stage3 =
        coordinate_search(mu_space, [&](const auto &pt) {
          PropertyMap mu;
          for (size_t i = 0; i < pp.mu_names.size(); ++i)
            mu[pp.mu_names[i]] = pt[i];
          return penalized(pp, p_real, mu);
        });
    for (size_t i = 0; i < pp.mu_names.size(); ++i)
      mu_final[pp.mu_names[i]] = stage3[i];
    final_value = penalized(pp, p_real, mu_final);
  }

  DesignSolution solution = molecule;
  solution.mu = mu_final;
  solution.objective = final_value;
  solution.relaxation_bound = bound;
  solution.optimality = Optimality::Heuristic;
  return solution;
}

}  // namespace camd
