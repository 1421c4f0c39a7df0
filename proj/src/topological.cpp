//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/topological.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "camd/error.hpp"

namespace camd {

namespace {

// Visits every directed simple path with exactly `length` edges.
void walk_paths(const MolecularGraph &g, int length,
                const std::function<void(const std::vector<int> &)> &visit) {
  std::vector<int> path;
  std::vector<char> on_path(g.num_vertices(), 0);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(path.size()) == length + 1) {
      visit(path);
      return;
    }
    for (int u : g.neighbors(path.back())) {
      if (on_path[u]) continue;
      path.push_back(u);
      on_path[u] = 1;
      extend();
      path.pop_back();
      on_path[u] = 0;
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    path = {v};
    on_path.assign(g.num_vertices(), 0);
    on_path[v] = 1;
    extend();
  }
}

double checked_inv_sqrt(double delta, const char *what) {
  if (delta <= 0.0)
    throw Error(ErrorCode::IsolatedVertex,
                std::string(what) + " is not positive");
  return 1.0 / std::sqrt(delta);
}

double chi_impl(const MolecularGraph &g,
                const std::vector<double> &delta, int order) {
  if (order < 0)
    throw Error(ErrorCode::InvalidArgument, "chi order must be >= 0");
  if (order == 0) {
    double sum = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v)
      sum += checked_inv_sqrt(delta[v], "vertex delta");
    return sum;
  }
  double doubled = 0.0;
  walk_paths(g, order, [&](const std::vector<int> &path) {
    double prod = 1.0;
    for (int v : path) {
      if (delta[v] <= 0.0)
        throw Error(ErrorCode::IsolatedVertex, "vertex delta is not positive");
      prod *= delta[v];
    }
    doubled += 1.0 / std::sqrt(prod);
  });
  return doubled / 2.0;  // each undirected path was walked in both directions
}

std::vector<double> plain_deltas(const MolecularGraph &g) {
  std::vector<double> d(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  return d;
}

std::vector<double> valence_deltas(const MolecularGraph &g) {
  std::vector<double> d(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    d[v] = valence_delta(g.vertex(v));
  return d;
}

std::string format6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

double wiener_index(const MolecularGraph &g) {
  return distance_matrix(g).sum() / 2.0;
}

double edge_ci(const MolecularGraph &g, int v, int w) {
  if (!g.has_edge(v, w))
    throw Error(ErrorCode::InvalidArgument,
                "edge_ci needs an existing edge");
  return 1.0 / std::sqrt(static_cast<double>(g.degree(v)) * g.degree(w));
}

double chi(const MolecularGraph &g, int order) {
  return chi_impl(g, plain_deltas(g), order);
}

double valence_delta(const VertexColor &v) {
  int numerator = v.valence_electrons - v.attached_hydrogens;
  if (v.atomic_number <= 10) return numerator;
  int core = v.atomic_number - v.valence_electrons - 1;
  if (core == 0)
    throw Error(ErrorCode::DivisionByZero,
                "valence delta undefined for Z - Z^V - 1 = 0");
  return static_cast<double>(numerator) / core;
}

double chi_valence(const MolecularGraph &g, int order) {
  return chi_impl(g, valence_deltas(g), order);
}

long long path_count(const MolecularGraph &g, int length) {
  if (length < 0)
    throw Error(ErrorCode::InvalidArgument, "path length must be >= 0");
  if (length == 0) return g.num_vertices();
  long long directed = 0;
  walk_paths(g, length, [&](const std::vector<int> &) { ++directed; });
  return directed / 2;
}

double kappa(const MolecularGraph &g, int order) {
  const long long a = g.num_vertices();
  if (order < 1 || order > 3)
    throw Error(ErrorCode::InvalidArgument, "kappa orders are 1..3");
  if (a < order + 1)
    throw Error(ErrorCode::UndefinedKappa,
                "kappa needs at least " + std::to_string(order + 1) +
                    " atoms");
  const long long p = path_count(g, order);
  if (p == 0)
    throw Error(ErrorCode::UndefinedKappa,
                "no paths of length " + std::to_string(order));
  double pmax = 0.0, pmin = 0.0, scale = 2.0;
  switch (order) {
    case 1:
      pmax = static_cast<double>(a) * (a - 1);
      pmin = static_cast<double>(a - 1);
      break;
    case 2:
      pmax = static_cast<double>(a - 1) * (a - 2) / 2.0;
      pmin = static_cast<double>(a - 2);
      break;
    case 3:
      pmax = a % 2 == 0 ? static_cast<double>(a - 2) * (a - 2) / 4.0
                        : static_cast<double>(a - 1) * (a - 3) / 4.0;
      pmin = static_cast<double>(a - 3);
      scale = 4.0;
      break;
  }
  return scale * pmax * pmin / (static_cast<double>(p) * p);
}

TiReport compute_ti_report(const MolecularGraph &g, int max_order) {
  TiReport report;
  report.wiener = wiener_index(g);
  for (int i = 0; i <= max_order; ++i) {
    report.chi[i] = chi(g, i);
    report.chi_valence[i] = chi_valence(g, i);
    report.path_counts[i] = path_count(g, i);
  }
  for (int i = 1; i <= 3; ++i) {
    if (g.num_vertices() >= i + 1 && path_count(g, i) > 0)
      report.kappa[i] = kappa(g, i);
  }
  return report;
}

std::vector<std::string> TiReport::to_lines() const {
  std::vector<std::string> lines;
  lines.push_back("wiener=" + format6(wiener));
  for (const auto &[i, value] : chi)
    lines.push_back("chi" + std::to_string(i) + "=" + format6(value));
  for (const auto &[i, value] : chi_valence)
    lines.push_back("chiv" + std::to_string(i) + "=" + format6(value));
  for (const auto &[i, value] : path_counts)
    lines.push_back("path" + std::to_string(i) + "=" + std::to_string(value));
  for (const auto &[i, value] : kappa)
    lines.push_back("kappa" + std::to_string(i) + "=" + format6(value));
  return lines;
}

}  // namespace camd
