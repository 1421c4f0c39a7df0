//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "camd/error.hpp"
#include "camd/feasibility.hpp"

namespace camd {

namespace {

using Rng = std::mt19937_64;

struct Space {
  const DesignProblem &problem;
  std::vector<std::string> ids;
  std::vector<int> lo, hi, phi;

  explicit Space(const DesignProblem &p) : problem(p) {
    ids = p.descriptor_ids();
    for (const std::string &id : ids) {
      auto [l, h] = p.bounds_for(id);
      lo.push_back(l);
      hi.push_back(h);
      phi.push_back(p.library.at(id).phi_ali);
    }
  }

  size_t dims() const { return ids.size(); }

  DescriptorVector to_vector(const std::vector<int> &values) const {
    DescriptorVector n;
    for (size_t i = 0; i < ids.size(); ++i)
      if (values[i] > 0) n.set(ids[i], values[i]);
    return n;
  }

  bool feasible(const std::vector<int> &values, PropertyMap *p = nullptr,
                int *m = nullptr) const {
    return feasible_point(problem, to_vector(values), p, m);
  }

  double score(const std::vector<int> &values, const PropertyMap &p) const {
    return objective_score(problem, to_vector(values), p);
  }
};

/// Greedy repair: clip to bounds, steer the total into [N^L, N^U] with
/// balance-neutral phi=2 groups when possible, then absorb the remaining
/// valence residual with phi=1 groups.
bool repair(const Space &space, std::vector<int> &values) {
  for (size_t i = 0; i < space.dims(); ++i)
    values[i] = std::clamp(values[i], space.lo[i], space.hi[i]);

  auto total = [&]() {
    long long t = 0;
    for (int v : values) t += v;
    return t;
  };
  auto balance = [&]() {
    long long b = 0;
    for (size_t i = 0; i < space.dims(); ++i)
      b += static_cast<long long>(space.phi[i] - 2) * values[i];
    return b;
  };
  auto adjust = [&](int target_phi, int delta) -> bool {
    for (size_t i = 0; i < space.dims(); ++i) {
      if (space.phi[i] != target_phi) continue;
      int next = values[i] + delta;
      if (next < space.lo[i] || next > space.hi[i]) continue;
      values[i] = next;
      return true;
    }
    return false;
  };

  for (int round = 0; round < 64; ++round) {
    if (space.feasible(values)) return true;

    if (total() > space.problem.total_upper) {
      if (adjust(2, -1) || adjust(1, -1) || adjust(3, -1) || adjust(4, -1))
        continue;
      return false;
    }
    if (total() < space.problem.total_lower) {
      if (adjust(2, +1) || adjust(1, +1)) continue;
      return false;
    }

    // aim at the nearest reachable ring parameter
    long long b = balance();
    long long best_gap = 0;
    bool found = false;
    for (int m : space.problem.allowed_ring_parameters()) {
      long long gap = 2LL * m - b;
      if (!found || std::llabs(gap) < std::llabs(best_gap)) {
        best_gap = gap;
        found = true;
      }
    }
    if (!found || best_gap == 0) {
      // balance holds but sufficiency or bounds fail; nudge with phi=1
      if (adjust(1, +1) || adjust(1, -1)) continue;
      return false;
    }
    // adding a phi=1 unit moves the balance by -1, removing by +1
    bool moved = best_gap < 0 ? adjust(1, +1) : adjust(1, -1);
    if (!moved) return false;
  }
  return space.feasible(values);
}

std::vector<int> random_point(const Space &space, Rng &rng) {
  std::vector<int> values(space.dims());
  for (size_t i = 0; i < space.dims(); ++i) {
    std::uniform_int_distribution<int> dist(space.lo[i], space.hi[i]);
    values[i] = dist(rng);
  }
  return values;
}

/// First feasible point in lexicographic order; nullopt when none exists
/// within the enumeration cap.
std::optional<std::vector<int>> first_feasible(const Space &space) {
  std::vector<int> values(space.dims());
  long long nodes = 0;
  std::optional<std::vector<int>> result;
  auto rec = [&](auto &&self, size_t dim, long long running) -> bool {
    if (++nodes > space.problem.enumeration_cap) return false;
    if (dim == space.dims()) {
      if (space.feasible(values)) {
        result = values;
        return false;
      }
      return true;
    }
    for (int v = space.lo[dim]; v <= space.hi[dim]; ++v) {
      if (running + v > space.problem.total_upper) break;
      values[dim] = v;
      if (!self(self, dim + 1, running + v)) return false;
    }
    values[dim] = space.lo[dim];
    return true;
  };
  rec(rec, 0, 0);
  return result;
}

DesignSolution finish(const Space &space, const std::vector<int> &values) {
  DescriptorVector n = space.to_vector(values);
  PropertyMap p;
  int m = 0;
  if (!feasible_point(space.problem, n, &p, &m))
    throw Error(ErrorCode::Internal, "heuristic returned an infeasible point");
  DesignSolution s;
  s.n = std::move(n);
  s.p = std::move(p);
  s.m = m;
  s.objective = objective_value(space.problem, s.n, s.p);
  s.optimality = Optimality::Heuristic;
  if (space.problem.objective.mode == ObjectiveMode::Target)
    s.deviations = target_deviations(space.problem, s.p);
  return s;
}

struct Incumbent {
  bool set = false;
  double score = 0.0;
  std::vector<int> values;

  void offer(const Space &space, const std::vector<int> &candidate,
             double candidate_score) {
    if (!set || candidate_score < score ||
        (candidate_score == score &&
         DescriptorVector::lex_less(space.to_vector(candidate),
                                    space.to_vector(values)))) {
      set = true;
      score = candidate_score;
      values = candidate;
    }
  }
};

// neighborhood moves: add one unit, remove one unit, move one unit
std::vector<std::vector<int>> neighbors_of(const Space &space,
                                           const std::vector<int> &values) {
  std::vector<std::vector<int>> out;
  for (size_t d = 0; d < space.dims(); ++d) {
    if (values[d] + 1 <= space.hi[d]) {
      auto next = values;
      ++next[d];
      out.push_back(std::move(next));
    }
    if (values[d] - 1 >= space.lo[d]) {
      auto next = values;
      --next[d];
      out.push_back(std::move(next));
    }
    for (size_t e = 0; e < space.dims(); ++e) {
      if (e == d) continue;
      if (values[d] - 1 >= space.lo[d] && values[e] + 1 <= space.hi[e]) {
        auto next = values;
        --next[d];
        ++next[e];
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::string key_of(const std::vector<int> &values) {
  std::string key;
  for (int v : values) {
    key += std::to_string(v);
    key += ',';
  }
  return key;
}

}  // namespace

DesignSolution ga_solve(const DesignProblem &problem, const GaParams &params) {
  problem.validate();
  if (params.population <= 0 || params.generations < 0)
    throw Error(ErrorCode::InvalidArgument, "ga needs positive budgets");
  Space space(problem);
  Rng rng(params.seed);

  struct Individual {
    std::vector<int> values;
    bool feasible = false;
    double score = 0.0;
  };
  auto evaluate = [&](Individual &ind) {
    PropertyMap p;
    ind.feasible = repair(space, ind.values) && space.feasible(ind.values, &p);
    ind.score = ind.feasible ? space.score(ind.values, p)
                             : std::numeric_limits<double>::infinity();
  };

  std::vector<Individual> population(params.population);
  Incumbent best;
  for (Individual &ind : population) {
    ind.values = random_point(space, rng);
    evaluate(ind);
    if (ind.feasible) best.offer(space, ind.values, ind.score);
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int gen = 0; gen < params.generations; ++gen) {
    auto tournament = [&]() -> const Individual & {
      std::uniform_int_distribution<int> pick(0, params.population - 1);
      const Individual &a = population[pick(rng)];
      const Individual &b = population[pick(rng)];
      return a.score <= b.score ? a : b;
    };
    std::vector<Individual> next;
    next.reserve(params.population);
    while (static_cast<int>(next.size()) < params.population) {
      Individual child;
      const Individual &mother = tournament();
      const Individual &father = tournament();
      child.values = mother.values;
      if (space.dims() > 1 && unit(rng) < params.crossover_rate) {
        std::uniform_int_distribution<size_t> cut(1, space.dims() - 1);
        size_t point = cut(rng);
        for (size_t i = point; i < space.dims(); ++i)
          child.values[i] = father.values[i];
      }
      for (size_t i = 0; i < space.dims(); ++i) {
        if (unit(rng) < params.mutation_rate) {
          int step = unit(rng) < 0.5 ? -1 : 1;
          child.values[i] =
              std::clamp(child.values[i] + step, space.lo[i], space.hi[i]);
        }
      }
      evaluate(child);
      if (child.feasible) best.offer(space, child.values, child.score);
      next.push_back(std::move(child));
    }
    // elitism: carry the best previous individual over the worst child
    auto best_prev = std::min_element(
        population.begin(), population.end(),
        [](const Individual &a, const Individual &b) { return a.score < b.score; });
    auto worst_next = std::max_element(
        next.begin(), next.end(),
        [](const Individual &a, const Individual &b) { return a.score < b.score; });
    if (best_prev->score < worst_next->score) *worst_next = *best_prev;
    population = std::move(next);
  }

  if (!best.set)
    throw Error(ErrorCode::NoFeasibleIndividual,
                "no feasible individual in the entire run");
  return finish(space, best.values);
}

DesignSolution tabu_solve(const DesignProblem &problem,
                          const TabuParams &params) {
  problem.validate();
  if (params.tenure < 1)
    throw Error(ErrorCode::InvalidArgument, "tenure must be >= 1");
  Space space(problem);
  Rng rng(params.seed);

  std::optional<std::vector<int>> start = first_feasible(space);
  if (!start)
    throw Error(ErrorCode::NoFeasibleStart, "no feasible starting point");

  std::vector<int> current = *start;
  PropertyMap p;
  space.feasible(current, &p);
  Incumbent best;
  best.offer(space, current, space.score(current, p));

  std::map<std::string, int> tabu;  // key -> expiry iteration
  for (int iter = 1; iter <= params.iterations; ++iter) {
    std::vector<std::vector<int>> candidates = neighbors_of(space, current);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    if (static_cast<int>(candidates.size()) > params.neighborhood_cap)
      candidates.resize(params.neighborhood_cap);

    bool moved = false;
    double move_score = 0.0;
    std::vector<int> move;
    for (const auto &candidate : candidates) {
      PropertyMap cp;
      if (!space.feasible(candidate, &cp)) continue;
      double score = space.score(candidate, cp);
      auto it = tabu.find(key_of(candidate));
      bool is_tabu = it != tabu.end() && it->second >= iter;
      bool aspirated = best.set && score < best.score;
      if (is_tabu && !aspirated) continue;
      if (!moved || score < move_score ||
          (score == move_score &&
           DescriptorVector::lex_less(space.to_vector(candidate),
                                      space.to_vector(move)))) {
        moved = true;
        move_score = score;
        move = candidate;
      }
    }
    if (!moved) continue;  // fully tabu neighborhood this round
    tabu[key_of(current)] = iter + params.tenure;
    current = move;
    best.offer(space, current, move_score);
  }
  return finish(space, best.values);
}

DesignSolution sa_solve(const DesignProblem &problem, const SaParams &params) {
  problem.validate();
  if (params.alpha <= 0.0 || params.alpha >= 1.0)
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  Space space(problem);
  Rng rng(params.seed);

  std::optional<std::vector<int>> start = first_feasible(space);
  if (!start)
    throw Error(ErrorCode::NoFeasibleStart, "no feasible starting point");

  double temperature = params.t0;
  if (temperature <= 0.0) {
    // objective range over random feasible samples
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    int kept = 0;
    for (int tries = 0; tries < 1000 && kept < 100; ++tries) {
      std::vector<int> sample = random_point(space, rng);
      PropertyMap p;
      if (!space.feasible(sample, &p)) continue;
      double score = space.score(sample, p);
      lo = std::min(lo, score);
      hi = std::max(hi, score);
      ++kept;
    }
    temperature = kept >= 2 ? std::max(hi - lo, 1e-8) : 1.0;
  }

  std::vector<int> current = *start;
  PropertyMap p;
  space.feasible(current, &p);
  double current_score = space.score(current, p);
  Incumbent best;
  best.offer(space, current, current_score);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int step = 0; step < params.steps; ++step) {
    std::vector<std::vector<int>> moves = neighbors_of(space, current);
    std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto &candidate : moves) {
      PropertyMap cp;
      if (!space.feasible(candidate, &cp)) continue;
      double score = space.score(candidate, cp);
      double delta = score - current_score;
      bool accept = delta <= 0.0;
      if (!accept && temperature > 0.0)
        accept = unit(rng) < std::exp(-delta / temperature);
      if (accept) {
        current = candidate;
        current_score = score;
        best.offer(space, current, current_score);
      }
      break;  // one proposal per step
    }
    temperature *= params.alpha;
  }
  return finish(space, best.values);
}

}  // namespace camd
