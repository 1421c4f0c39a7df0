//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_HEURISTICS_HPP
#define CAMD_HEURISTICS_HPP

#include <cstdint>

#include "camd/problem.hpp"

namespace camd {

struct GaParams {
  int population = 40;
  int generations = 80;
  double crossover_rate = 0.9;
  double mutation_rate = 0.25;
  uint64_t seed = 0;
};

struct TabuParams {
  int tenure = 7;
  int iterations = 300;
  int neighborhood_cap = 64;
  uint64_t seed = 0;
};

struct SaParams {
  double t0 = 0.0;  // <= 0: estimated from random feasible samples
  double alpha = 0.95;
  int steps = 4000;
  uint64_t seed = 0;
};

/// Genetic algorithm over integer descriptor vectors: one-point crossover in
/// descriptor-id order, +-1 mutation clipped to bounds, greedy valence
/// repair through phi=1 groups. Deterministic under a fixed seed.
DesignSolution ga_solve(const DesignProblem &problem, const GaParams &params);

/// Tabu search over the add/remove/swap neighborhood with tenure expiry and
/// an aspiration override for moves beating the incumbent.
DesignSolution tabu_solve(const DesignProblem &problem,
                          const TabuParams &params);

/// Simulated annealing with Metropolis acceptance and geometric cooling.
DesignSolution sa_solve(const DesignProblem &problem, const SaParams &params);

}  // namespace camd

#endif  // CAMD_HEURISTICS_HPP
