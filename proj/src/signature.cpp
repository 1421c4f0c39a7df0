//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/signature.hpp"

#include <algorithm>
#include <functional>

#include "camd/error.hpp"

namespace camd {

namespace {

bool rule_matches_vertex(const ColorRule &rule, const VertexColor &vertex,
                         int degree) {
  if (rule.hydrogen_parent) return false;
  if (rule.element && *rule.element != vertex.element) return false;
  if (rule.tag && *rule.tag != vertex.tag) return false;
  if (rule.aromatic &&
      *rule.aromatic != (vertex.tag == Hybridization::Aromatic))
    return false;
  if (rule.degree && *rule.degree != degree) return false;
  return true;
}

}  // namespace

std::string ColoringScheme::vertex_color(const VertexColor &vertex,
                                         int degree) const {
  for (const ColorRule &rule : rules_) {
    if (rule.element && *rule.element == "H") continue;
    if (rule_matches_vertex(rule, vertex, degree)) return rule.label;
  }
  throw Error(ErrorCode::UncoloredElement,
              "scheme '" + name_ + "' does not color element '" +
                  vertex.element + "'");
}

std::optional<std::string> ColoringScheme::hydrogen_color(
    const VertexColor &parent) const {
  for (const ColorRule &rule : rules_) {
    if (!rule.element || *rule.element != "H") continue;
    if (rule.hydrogen_parent && *rule.hydrogen_parent != parent.element)
      continue;
    if (rule.label.empty()) return std::nullopt;
    return rule.label;
  }
  return std::nullopt;
}

const ColoringScheme &degree_scheme() {
  static const ColoringScheme scheme = [] {
    std::vector<ColorRule> rules;
    for (const char *symbol :
         {"C", "N", "O", "S", "P", "F", "Cl", "Br", "I", "Si", "B"}) {
      for (int degree = 0; degree <= 8; ++degree) {
        ColorRule rule;
        rule.element = symbol;
        rule.degree = degree;
        rule.label = std::string(symbol) + std::to_string(degree);
        rules.push_back(std::move(rule));
      }
    }
    return ColoringScheme("degree", std::move(rules));
  }();
  return scheme;
}

const ColoringScheme &hybrid_scheme() {
  static const ColoringScheme scheme = [] {
    std::vector<ColorRule> rules;
    // N-attached hydrogens show up as explicit leaves
    {
      ColorRule rule;
      rule.element = "H";
      rule.hydrogen_parent = "N";
      rule.label = "H_A";
      rules.push_back(std::move(rule));
    }
    for (const char *symbol :
         {"C", "N", "O", "S", "P", "F", "Cl", "Br", "I", "Si", "B"}) {
      {
        ColorRule rule;
        rule.element = symbol;
        rule.aromatic = true;
        rule.label = std::string("a") + symbol;
        rules.push_back(std::move(rule));
      }
      const std::pair<Hybridization, const char *> tags[] = {
          {Hybridization::Sp, "1"},
          {Hybridization::Sp2, "2"},
          {Hybridization::Sp3, "3"},
      };
      for (const auto &[tag, suffix] : tags) {
        ColorRule rule;
        rule.element = symbol;
        rule.tag = tag;
        rule.label = std::string(symbol) + suffix;
        rules.push_back(std::move(rule));
      }
    }
    return ColoringScheme("hybrid", std::move(rules));
  }();
  return scheme;
}

const ColoringScheme &builtin_scheme(const std::string &name) {
  if (name == "degree") return degree_scheme();
  if (name == "hybrid") return hybrid_scheme();
  throw Error(ErrorCode::InvalidArgument,
              "no built-in coloring scheme named '" + name + "'");
}

ColoredGraph color_graph(const MolecularGraph &g,
                         const ColoringScheme &scheme) {
  ColoredGraph colored{g, {}, {}};
  colored.colors.reserve(g.num_vertices());
  colored.hydrogen_colors.reserve(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    colored.colors.push_back(scheme.vertex_color(g.vertex(v), g.degree(v)));
    colored.hydrogen_colors.push_back(scheme.hydrogen_color(g.vertex(v)));
  }
  return colored;
}

namespace {

const char *bond_prefix(BondType type) {
  switch (type) {
    case BondType::Single: return "";
    case BondType::Double: return "=";
    case BondType::Triple: return "#";
    case BondType::Aromatic: return ":";
  }
  return "";
}

std::string render_subtree(const ColoredGraph &colored,
                           const std::vector<int> &dist, int v, int depth,
                           int height) {
  std::string out = colored.colors[v];
  if (depth == height) return out;
  std::vector<std::string> children;
  for (int u : colored.graph.neighbors(v)) {
    if (dist[u] != dist[v] + 1) continue;
    std::string token = bond_prefix(colored.graph.bond(v, u));
    token += render_subtree(colored, dist, u, depth + 1, height);
    children.push_back(std::move(token));
  }
  if (colored.hydrogen_colors[v]) {
    for (int i = 0; i < colored.graph.vertex(v).attached_hydrogens; ++i)
      children.push_back(*colored.hydrogen_colors[v]);
  }
  std::sort(children.begin(), children.end());
  for (const std::string &child : children) {
    out += '(';
    out += child;
    out += ')';
  }
  return out;
}

}  // namespace

AtomicSignature atomic_signature(const ColoredGraph &colored, int root,
                                 int height) {
  if (root < 0 || root >= colored.graph.num_vertices())
    throw Error(ErrorCode::InvalidArgument, "signature root out of range");
  if (height < 0)
    throw Error(ErrorCode::InvalidArgument, "signature height must be >= 0");
  AtomicSignature sig;
  sig.root = root;
  sig.height = height;
  if (height == 0) {
    sig.canonical = colored.colors[root];
    return sig;
  }
  std::vector<int> dist = bfs_distances(colored.graph, root);
  sig.canonical = render_subtree(colored, dist, root, 0, height);
  return sig;
}

DescriptorVector signature_counts(const ColoredGraph &colored, int height) {
  DescriptorVector counts;
  for (int v = 0; v < colored.graph.num_vertices(); ++v)
    counts.add(atomic_signature(colored, v, height).canonical, 1);
  return counts;
}

double estimate_sd(const SdModel &model,
                   const std::map<int, DescriptorVector> &counts_per_height) {
  for (int h : model.heights_used) {
    if (!counts_per_height.count(h))
      throw Error(ErrorCode::MissingHeight,
                  "no counts supplied for height " + std::to_string(h));
  }
  double sum = 0.0;
  for (const auto &[key, coefficient] : model.coefficients) {
    const auto &[height, sig] = key;
    auto it = counts_per_height.find(height);
    if (it == counts_per_height.end()) continue;
    sum += coefficient * it->second.get(sig);
  }
  return sum;
}

}  // namespace camd
