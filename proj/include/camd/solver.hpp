//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_SOLVER_HPP
#define CAMD_SOLVER_HPP

#include <vector>

#include "camd/problem.hpp"

namespace camd {

/// Exhaustively lists every feasible descriptor vector in deterministic
/// lexicographic order. Throws SearchSpaceTooLarge when the bound box
/// exceeds the problem's enumeration cap.
std::vector<DesignSolution> enumerate_feasible(const DesignProblem &problem);

/// Minimizes the weighted target deviation by best-first branch-and-bound.
/// Optimality is proven for identity-transform models without interactions;
/// other models fall back to exhaustive enumeration with the optimality flag
/// downgraded. Ties break toward the lexicographically smallest n.
DesignSolution solve_target(const DesignProblem &problem);

/// Optimizes a direct objective. Structured linear/quadratic objectives over
/// identity-transform models run through branch-and-bound with interval
/// bounds; custom callbacks and nonlinear models are enumerated.
DesignSolution solve_direct(const DesignProblem &problem);

/// Two-stage binary mixture design: candidate components are enumerated per
/// base problem, then the mole fraction is optimized on [0, 1] for every
/// candidate pair (1e-6 tolerance on x).
DesignSolution solve_mixture(const MixtureProblem &mp);

/// CoMT-style decomposition: (1) optimize the process over the relaxed
/// continuous property box, (2) design the molecule closest to the ideal
/// properties, (3) re-optimize the process variables for the realized
/// molecule. The stage-1 value is reported as `relaxation_bound`.
DesignSolution solve_process(const DesignProblem &problem,
                             const ProcessProblem &pp);

}  // namespace camd

#endif  // CAMD_SOLVER_HPP
