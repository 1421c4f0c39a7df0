//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "camd/assemble.hpp"
#include "camd/decompose.hpp"
#include "camd/error.hpp"
#include "camd/heuristics.hpp"
#include "camd/io.hpp"
#include "camd/signature.hpp"
#include "camd/solver.hpp"
#include "camd/topological.hpp"

namespace camd {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;

std::string format6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string property_cell(const PropertyMap &p) {
  if (p.empty()) return "-";
  std::string out;
  for (const auto &[name, value] : p) {
    if (!out.empty()) out += ',';
    out += name + "=" + format6(value);
  }
  return out;
}

std::string n_cell(const DescriptorVector &n) {
  std::string cell = n.to_string();
  return cell.empty() ? "-" : cell;
}

int exit_code_for(const Error &e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateName:
    case ErrorCode::DanglingFragmentRef:
    case ErrorCode::InconsistentBounds:
      return kExitParse;
    case ErrorCode::Infeasible:
    case ErrorCode::NoCandidates:
    case ErrorCode::NoFeasibleStart:
    case ErrorCode::NoFeasibleIndividual:
    case ErrorCode::NoCover:
    case ErrorCode::NoAssembly:
      return kExitInfeasible;
    default:
      return kExitInternal;
  }
}

struct EstimateOptions {
  std::string gc_model;
  std::string sd_model;
  bool ti = false;
  std::string counts;
  std::string graph;
  std::string library;
  std::string scheme = "degree";
};

int cmd_estimate(const EstimateOptions &opt, std::ostream &out) {
  int selected = (opt.gc_model.empty() ? 0 : 1) + (opt.sd_model.empty() ? 0 : 1) +
                 (opt.ti ? 1 : 0);
  if (selected != 1)
    throw Error(ErrorCode::InvalidArgument,
                "pick exactly one of --gc, --sd, --ti");

  if (opt.ti) {
    if (opt.graph.empty())
      throw Error(ErrorCode::InvalidArgument, "--ti needs --graph");
    MolecularGraph g = parse_graph_file(opt.graph);
    for (const std::string &line : compute_ti_report(g).to_lines())
      out << line << "\n";
    return kExitOk;
  }
  if (!opt.gc_model.empty()) {
    GcModel model = parse_gc_model_file(opt.gc_model);
    DescriptorVector n;
    if (!opt.counts.empty()) {
      n = parse_counts_file(opt.counts);
    } else if (!opt.graph.empty()) {
      if (opt.library.empty())
        throw Error(ErrorCode::InvalidArgument,
                    "estimating from a graph needs --library");
      n = decompose_into_groups(parse_graph_file(opt.graph),
                                parse_group_library(opt.library));
    } else {
      throw Error(ErrorCode::InvalidArgument, "--gc needs --counts or --graph");
    }
    out << model.property_name << "=" << format6(estimate_gc(model, n))
        << "\n";
    return kExitOk;
  }
  // signature descriptors
  SdModel model = parse_sd_model_file(opt.sd_model);
  if (opt.graph.empty())
    throw Error(ErrorCode::InvalidArgument, "--sd needs --graph");
  ColoredGraph colored =
      color_graph(parse_graph_file(opt.graph), builtin_scheme(opt.scheme));
  std::map<int, DescriptorVector> counts;
  for (int h : model.heights_used) counts[h] = signature_counts(colored, h);
  out << model.property_name << "=" << format6(estimate_sd(model, counts))
      << "\n";
  return kExitOk;
}

struct CheckOptions {
  std::string counts;
  std::string library;
  std::string m = "-1";
  bool aromatic = false;
  std::string ti_file;
  std::string sd_counts;
  int height = 1;
  std::vector<int> rings{0, 0};
};

int cmd_check(const CheckOptions &opt, std::ostream &out) {
  std::vector<CheckLine> checks;
  if (!opt.ti_file.empty()) {
    checks = check_ti_feasibility(parse_ti_assignment_file(opt.ti_file))
                 .checks();
  } else if (!opt.sd_counts.empty()) {
    DescriptorVector n = parse_counts_file(opt.sd_counts);
    std::vector<std::string> signatures;
    for (const auto &[sig, count] : n.counts()) signatures.push_back(sig);
    SdConstraintData data = derive_sd_constraints(
        signatures, opt.height, RingCounts{opt.rings[0], opt.rings[1]});
    checks = check_sd_feasibility(n, data).checks();
  } else if (!opt.counts.empty()) {
    if (opt.library.empty())
      throw Error(ErrorCode::InvalidArgument, "check needs --library");
    DescriptorVector n = parse_counts_file(opt.counts);
    GroupLibrary lib = parse_group_library(opt.library);
    if (opt.aromatic) {
      checks =
          check_gc_aromatic(n, lib, opt.rings[0], opt.rings[1]).checks();
    } else {
      if (opt.m == "any") {
        // try each ring parameter, report the best outcome
        GcFeasibilityReport best;
        bool first = true;
        for (int m : {-1, 0, 1}) {
          GcFeasibilityReport r = check_gc_basic(n, lib, m);
          if (first || (r.ok() && !best.ok())) best = r;
          first = false;
          if (r.ok()) break;
        }
        checks = best.checks();
      } else {
        checks = check_gc_basic(n, lib, std::stoi(opt.m)).checks();
      }
    }
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "check needs counts, --ti or --sd input");
  }
  bool all_ok = true;
  for (const std::string &line : render_check_lines(checks)) out << line << "\n";
  for (const CheckLine &c : checks) all_ok &= c.ok;
  return all_ok ? kExitOk : kExitInfeasible;
}

struct SolveOptions {
  std::string problem_file;
  std::string solver = "bnb";
  uint64_t seed = 0;
  bool seed_given = false;
  int max_results = 50;
  int assemble = 0;
};

void print_solution_table_header(std::ostream &out) {
  out << "rank objective n p optimality\n";
}

void print_solution_row(std::ostream &out, int rank,
                        const DesignSolution &solution) {
  out << rank << " " << format6(solution.objective) << " "
      << n_cell(solution.n) << " " << property_cell(solution.p) << " "
      << optimality_token(solution.optimality) << "\n";
}

void print_structures(std::ostream &out, const DesignProblem &problem,
                      const DesignSolution &solution, int limit) {
  if (limit <= 0) return;
  AssemblyResult assembly =
      assemble_structures(solution.n, problem.library, limit);
  int index = 0;
  for (const MolecularGraph &g : assembly.structures) {
    out << "# structure " << ++index
        << (assembly.truncated ? " (truncated set)" : "") << "\n";
    out << write_graph_text(g);
  }
}

int cmd_enumerate(const SolveOptions &opt, std::ostream &out,
                  std::ostream &err) {
  ParsedProblem parsed = parse_problem(opt.problem_file);
  auto started = std::chrono::steady_clock::now();
  std::vector<DesignSolution> solutions = enumerate_feasible(parsed.base);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  out << "# camd enumerate report\n";
  out << "# problem: " << opt.problem_file << "\n";
  out << "# feasible: " << solutions.size() << "\n";
  std::stable_sort(solutions.begin(), solutions.end(),
                   [](const DesignSolution &a, const DesignSolution &b) {
                     return a.objective < b.objective;
                   });
  print_solution_table_header(out);
  int rank = 0;
  for (const DesignSolution &s : solutions) {
    if (rank >= opt.max_results) break;
    print_solution_row(out, ++rank, s);
  }
  err << "elapsed " << format6(elapsed.count()) << " s\n";
  return solutions.empty() ? kExitInfeasible : kExitOk;
}

int cmd_design(const SolveOptions &opt, std::ostream &out, std::ostream &err) {
  ParsedProblem parsed = parse_problem(opt.problem_file);
  uint64_t seed = opt.seed_given ? opt.seed : parsed.seed;
  auto started = std::chrono::steady_clock::now();

  DesignSolution solution;
  if (opt.solver == "bnb") {
    solution = parsed.base.objective.mode == ObjectiveMode::Direct
                   ? solve_direct(parsed.base)
                   : solve_target(parsed.base);
  } else if (opt.solver == "enum") {
    std::vector<DesignSolution> all = enumerate_feasible(parsed.base);
    if (all.empty())
      throw Error(ErrorCode::Infeasible, "no feasible descriptor vector");
    size_t best = 0;
    for (size_t i = 1; i < all.size(); ++i) {
      double a = objective_score(parsed.base, all[i].n, all[i].p);
      double b = objective_score(parsed.base, all[best].n, all[best].p);
      if (a < b) best = i;
    }
    solution = all[best];
  } else if (opt.solver == "ga") {
    GaParams params;
    params.seed = seed;
    solution = ga_solve(parsed.base, params);
  } else if (opt.solver == "tabu") {
    TabuParams params;
    params.seed = seed;
    solution = tabu_solve(parsed.base, params);
  } else if (opt.solver == "sa") {
    SaParams params;
    params.seed = seed;
    solution = sa_solve(parsed.base, params);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "solver must be bnb, enum, ga, tabu or sa");
  }
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  out << "# camd design report\n";
  out << "# problem: " << opt.problem_file << "\n";
  out << "# solver: " << opt.solver << "\n";
  out << "# seed: " << seed << "\n";
  print_solution_table_header(out);
  print_solution_row(out, 1, solution);
  print_structures(out, parsed.base, solution, opt.assemble);
  err << "elapsed " << format6(elapsed.count()) << " s\n";
  return kExitOk;
}

int cmd_mixture(const SolveOptions &opt, std::ostream &out,
                std::ostream &err) {
  ParsedProblem parsed = parse_problem(opt.problem_file);
  if (!parsed.mixture)
    throw Error(ErrorCode::ParseError,
                opt.problem_file + ": no mixture section");
  auto started = std::chrono::steady_clock::now();
  DesignSolution solution = solve_mixture(*parsed.mixture);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  out << "# camd mixture report\n";
  out << "# problem: " << opt.problem_file << "\n";
  out << "rank objective x n1 n2 q optimality\n";
  out << "1 " << format6(solution.objective) << " " << format6(solution.x[0])
      << " " << n_cell(solution.components[0].n) << " "
      << n_cell(solution.components[1].n) << " " << property_cell(solution.q)
      << " " << optimality_token(solution.optimality) << "\n";
  err << "elapsed " << format6(elapsed.count()) << " s\n";
  return kExitOk;
}

int cmd_process(const SolveOptions &opt, std::ostream &out,
                std::ostream &err) {
  ParsedProblem parsed = parse_problem(opt.problem_file);
  if (!parsed.process)
    throw Error(ErrorCode::ParseError,
                opt.problem_file + ": no process section");
  auto started = std::chrono::steady_clock::now();
  DesignSolution solution = solve_process(parsed.base, *parsed.process);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  out << "# camd process report\n";
  out << "# problem: " << opt.problem_file << "\n";
  out << "# relaxation_bound: " << format6(solution.relaxation_bound) << "\n";
  out << "rank objective n p mu optimality\n";
  out << "1 " << format6(solution.objective) << " " << n_cell(solution.n)
      << " " << property_cell(solution.p) << " " << property_cell(solution.mu)
      << " " << optimality_token(solution.optimality) << "\n";
  err << "elapsed " << format6(elapsed.count()) << " s\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"molecular design engine"};
  app.require_subcommand(1);

  EstimateOptions estimate;
  CLI::App *est = app.add_subcommand("estimate", "forward QSPR estimates");
  est->add_option("--gc", estimate.gc_model, "GC model file");
  est->add_option("--sd", estimate.sd_model, "SD model file");
  est->add_flag("--ti", estimate.ti, "topological-index report");
  est->add_option("--counts", estimate.counts, "descriptor counts file");
  est->add_option("--graph", estimate.graph, "molecular graph file");
  est->add_option("--library", estimate.library, "group library file");
  est->add_option("--scheme", estimate.scheme, "coloring scheme (degree|hybrid)");
  est->add_option("graph", estimate.graph, "molecular graph file");

  CheckOptions check;
  CLI::App *chk = app.add_subcommand("check", "structural feasibility checks");
  chk->add_option("counts", check.counts, "descriptor counts file");
  chk->add_option("--library", check.library, "group library file");
  chk->add_option("--m", check.m, "ring parameter (-1|0|1|any)");
  chk->add_flag("--aromatic", check.aromatic, "aromatic-extension checks");
  chk->add_option("--ti", check.ti_file, "TI assignment file");
  chk->add_option("--sd", check.sd_counts, "signature counts file");
  chk->add_option("--height", check.height, "signature height");
  chk->add_option("--rings", check.rings, "aromatic and aliphatic ring counts")
      ->expected(2);

  SolveOptions solve;
  CLI::App *enu = app.add_subcommand("enumerate", "list feasible molecules");
  enu->add_option("problem", solve.problem_file, "problem file")->required();
  enu->add_option("--max-results", solve.max_results, "rows to print");

  CLI::App *dsn = app.add_subcommand("design", "single-molecule design");
  dsn->add_option("problem", solve.problem_file, "problem file")->required();
  dsn->add_option("--solver", solve.solver, "bnb|enum|ga|tabu|sa");
  CLI::Option *seed_option = dsn->add_option("--seed", solve.seed, "random seed");
  dsn->add_option("--max-results", solve.max_results, "rows to print");
  dsn->add_option("--assemble", solve.assemble,
                  "assembled structures to print");

  CLI::App *mix = app.add_subcommand("mixture", "binary mixture design");
  mix->add_option("problem", solve.problem_file, "problem file")->required();

  CLI::App *prc = app.add_subcommand("process", "integrated process design");
  prc->add_option("problem", solve.problem_file, "problem file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  solve.seed_given = seed_option->count() > 0;

  try {
    if (est->parsed()) return cmd_estimate(estimate, out);
    if (chk->parsed()) return cmd_check(check, out);
    if (enu->parsed()) return cmd_enumerate(solve, out, err);
    if (dsn->parsed()) return cmd_design(solve, out, err);
    if (mix->parsed()) return cmd_mixture(solve, out, err);
    if (prc->parsed()) return cmd_process(solve, out, err);
    err << "no subcommand\n";
    return kExitParse;
  } catch (const Error &e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace camd
