//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <utility>

#include "camd/elements.hpp"
#include "camd/error.hpp"

namespace camd {

int bond_order_x2(BondType type) {
  switch (type) {
    case BondType::Single: return 2;
    case BondType::Double: return 4;
    case BondType::Triple: return 6;
    case BondType::Aromatic: return 3;
  }
  return 0;
}

std::string_view bond_type_token(BondType type) {
  switch (type) {
    case BondType::Single: return "1";
    case BondType::Double: return "2";
    case BondType::Triple: return "3";
    case BondType::Aromatic: return "a";
  }
  return "?";
}

BondType parse_bond_type(std::string_view token) {
  if (token == "1" || token == "single") return BondType::Single;
  if (token == "2" || token == "double") return BondType::Double;
  if (token == "3" || token == "triple") return BondType::Triple;
  if (token == "a" || token == "ar" || token == "aromatic")
    return BondType::Aromatic;
  throw Error(ErrorCode::ParseError,
              "unknown bond order '" + std::string(token) + "'");
}

std::string_view hybridization_token(Hybridization tag) {
  switch (tag) {
    case Hybridization::Sp: return "sp";
    case Hybridization::Sp2: return "sp2";
    case Hybridization::Sp3: return "sp3";
    case Hybridization::Aromatic: return "aromatic";
  }
  return "?";
}

Hybridization parse_hybridization(std::string_view token) {
  if (token == "sp") return Hybridization::Sp;
  if (token == "sp2") return Hybridization::Sp2;
  if (token == "sp3") return Hybridization::Sp3;
  if (token == "aromatic" || token == "ar") return Hybridization::Aromatic;
  throw Error(ErrorCode::ParseError,
              "unknown hybridization tag '" + std::string(token) + "'");
}

VertexColor make_vertex(std::string_view element, int hydrogens,
                        Hybridization tag, int open_valence) {
  const ElementInfo &info = element_info(element);
  VertexColor v;
  v.element = info.symbol;
  v.attached_hydrogens = hydrogens;
  v.tag = tag;
  v.valence_electrons = info.valence_electrons;
  v.atomic_number = info.atomic_number;
  v.open_valence =
      open_valence >= 0 ? open_valence : info.standard_valence - hydrogens;
  return v;
}

bool MolecularGraph::has_edge(int v, int w) const {
  const auto &adj = adjacency_.at(v);
  return std::binary_search(adj.begin(), adj.end(), w);
}

BondType MolecularGraph::bond(int v, int w) const {
  if (v > w) std::swap(v, w);
  for (const Edge &e : edges_) {
    if (e.v == v && e.w == w) return e.type;
  }
  throw Error(ErrorCode::InvalidArgument,
              "no edge between " + std::to_string(v) + " and " +
                  std::to_string(w));
}

namespace {

void validate_vertex(const VertexColor &c, int index) {
  auto fail = [&](const std::string &what) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex " + std::to_string(index) + ": " + what);
  };
  if (c.open_valence < 0) fail("negative open_valence");
  if (c.attached_hydrogens < 0) fail("negative attached_hydrogens");
  if (c.valence_electrons < 1 || c.atomic_number < c.valence_electrons)
    fail("requires Z >= Z^V >= 1");
  element_info(c.element);  // must be a known element
}

}  // namespace

MolecularGraph build_graph(std::vector<VertexColor> vertices,
                           std::vector<Edge> edges, RingCounts rings) {
  const int n = static_cast<int>(vertices.size());
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  if (rings.aromatic < 0 || rings.aliphatic < 0)
    throw Error(ErrorCode::InvalidArgument, "negative ring count");
  for (int i = 0; i < n; ++i) validate_vertex(vertices[i], i);

  for (Edge &e : edges) {
    if (e.v < 0 || e.v >= n || e.w < 0 || e.w >= n)
      throw Error(ErrorCode::InvalidArgument, "edge index out of range");
    if (e.v == e.w)
      throw Error(ErrorCode::InvalidArgument,
                  "self-loop at vertex " + std::to_string(e.v));
    if (e.v > e.w) std::swap(e.v, e.w);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
    return std::tie(a.v, a.w) < std::tie(b.v, b.w);
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].v == edges[i - 1].v && edges[i].w == edges[i - 1].w)
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + std::to_string(edges[i].v) + "-" +
                      std::to_string(edges[i].w));
  }

  MolecularGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.rings_ = rings;
  g.adjacency_.assign(n, {});
  for (const Edge &e : g.edges_) {
    g.adjacency_[e.v].push_back(e.w);
    g.adjacency_[e.w].push_back(e.v);
  }
  for (auto &adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  // connectivity
  std::vector<int> dist = bfs_distances(g, 0);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0)
      throw Error(ErrorCode::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from 0");
  }

  // valence: neighbor count matches the declared delta, and twice the
  // bond-order sum matches 2 * (standard valence - hydrogens)
  std::vector<int> order_x2(n, 0);
  for (const Edge &e : g.edges_) {
    order_x2[e.v] += bond_order_x2(e.type);
    order_x2[e.w] += bond_order_x2(e.type);
  }
  for (int v = 0; v < n; ++v) {
    const VertexColor &c = g.vertices_[v];
    if (g.degree(v) != c.open_valence)
      throw Error(ErrorCode::ValenceViolation,
                  "vertex " + std::to_string(v) + ": degree " +
                      std::to_string(g.degree(v)) + " != open_valence " +
                      std::to_string(c.open_valence));
    int allowed = element_info(c.element).standard_valence;
    int want_x2 = 2 * (allowed - c.attached_hydrogens);
    if (order_x2[v] != want_x2)
      throw Error(ErrorCode::ValenceViolation,
                  "vertex " + std::to_string(v) + ": bond-order sum " +
                      std::to_string(order_x2[v] / 2.0) + " != " +
                      std::to_string(want_x2 / 2.0));
  }

  int cycle_dim = g.num_edges() - n + 1;
  if (cycle_dim != rings.aromatic + rings.aliphatic)
    throw Error(ErrorCode::RingCountMismatch,
                "cycle-space dimension " + std::to_string(cycle_dim) +
                    " != declared rings " +
                    std::to_string(rings.aromatic + rings.aliphatic));
  return g;
}

std::vector<int> bfs_distances(const MolecularGraph &g, int source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
    }
  }
  return dist;
}

Eigen::MatrixXi distance_matrix(const MolecularGraph &g) {
  const int n = g.num_vertices();
  Eigen::MatrixXi d(n, n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> row = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) d(v, u) = row[u];
  }
  return d;
}

namespace {

// --- canonical labeling: color refinement + individualization ---

Eigen::MatrixXi bond_order_table(const MolecularGraph &g) {
  Eigen::MatrixXi table = Eigen::MatrixXi::Zero(g.num_vertices(),
                                                g.num_vertices());
  for (const Edge &e : g.edges()) {
    table(e.v, e.w) = bond_order_x2(e.type);
    table(e.w, e.v) = table(e.v, e.w);
  }
  return table;
}

std::string vertex_key(const VertexColor &c) {
  std::string key = c.element;
  key += '|';
  key += std::to_string(c.open_valence);
  key += '|';
  key += hybridization_token(c.tag);
  key += '|';
  key += std::to_string(c.attached_hydrogens);
  key += '|';
  key += std::to_string(c.valence_electrons);
  key += '|';
  key += std::to_string(c.atomic_number);
  return key;
}

// Refines integer colors until stable. Colors are ranks, smaller = earlier.
void refine(const MolecularGraph &g, const Eigen::MatrixXi &bonds,
            std::vector<int> &colors) {
  const int n = g.num_vertices();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      key.push_back(colors[v]);
      std::vector<std::pair<int, int>> nbr;
      nbr.reserve(g.degree(v));
      for (int u : g.neighbors(v))
        nbr.emplace_back(bonds(v, u), colors[u]);
      std::sort(nbr.begin(), nbr.end());
      for (auto &[b, c] : nbr) {
        key.push_back(b);
        key.push_back(c);
      }
      keys[v] = {std::move(key), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++rank;
      next[sorted[i].second] = rank;
    }
    if (next == colors) break;
    colors = std::move(next);
  }
}

std::string certificate(const MolecularGraph &g,
                        const std::vector<int> &colors) {
  const int n = g.num_vertices();
  // discrete coloring: colors is a permutation rank
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[colors[v]] = v;
  std::vector<int> pos(n);
  for (int v = 0; v < n; ++v) pos[v] = colors[v];

  std::string cert = "V";
  for (int i = 0; i < n; ++i) {
    cert += '[';
    cert += vertex_key(g.vertex(order[i]));
    cert += ']';
  }
  std::vector<std::tuple<int, int, int>> edges;
  edges.reserve(g.num_edges());
  for (const Edge &e : g.edges()) {
    int a = pos[e.v], b = pos[e.w];
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b, bond_order_x2(e.type));
  }
  std::sort(edges.begin(), edges.end());
  cert += "E";
  for (auto &[a, b, t] : edges) {
    cert += '(';
    cert += std::to_string(a);
    cert += ',';
    cert += std::to_string(b);
    cert += ',';
    cert += std::to_string(t);
    cert += ')';
  }
  cert += "R(" + std::to_string(g.ring_counts().aromatic) + "," +
          std::to_string(g.ring_counts().aliphatic) + ")";
  return cert;
}

void search_canonical(const MolecularGraph &g, const Eigen::MatrixXi &bonds,
                      std::vector<int> colors, std::string &best) {
  refine(g, bonds, colors);
  const int n = g.num_vertices();
  int max_color = *std::max_element(colors.begin(), colors.end());
  if (max_color == n - 1) {
    std::string cert = certificate(g, colors);
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }
  // first non-singleton cell, by color
  std::vector<int> count(max_color + 1, 0);
  for (int c : colors) ++count[c];
  int target = 0;
  while (count[target] <= 1) ++target;
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> branched = colors;
    // individualize v: give it a fresh color just below its cell
    for (int u = 0; u < n; ++u)
      if (branched[u] >= target) ++branched[u];
    branched[v] = target;
    search_canonical(g, bonds, std::move(branched), best);
  }
}

}  // namespace

std::string canonical_label(const MolecularGraph &g) {
  const int n = g.num_vertices();
  std::vector<std::pair<std::string, int>> keyed(n);
  for (int v = 0; v < n; ++v) keyed[v] = {vertex_key(g.vertex(v)), v};
  std::vector<std::pair<std::string, int>> sorted = keyed;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colors(n);
  int rank = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sorted[i].first != sorted[i - 1].first) ++rank;
    colors[sorted[i].second] = rank;
  }
  std::string best;
  search_canonical(g, bond_order_table(g), std::move(colors), best);
  return best;
}

MolecularGraph permute_graph(const MolecularGraph &g,
                             const std::vector<int> &perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<VertexColor> vertices(n);
  for (int v = 0; v < n; ++v) vertices[perm[v]] = g.vertex(v);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge &e : g.edges())
    edges.push_back({perm[e.v], perm[e.w], e.type});
  return build_graph(std::move(vertices), std::move(edges), g.ring_counts());
}

}  // namespace camd
