//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_SIGNATURE_HPP
#define CAMD_SIGNATURE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "camd/descriptor.hpp"
#include "camd/graph.hpp"

namespace camd {

/// One coloring rule; unset fields are wildcards, first matching rule wins.
/// Rules whose `element` is "H" color the implicit hydrogens of a parent
/// vertex (matched through `hydrogen_parent`); an empty label suppresses the
/// hydrogen from signature trees.
struct ColorRule {
  std::optional<std::string> element;
  std::optional<Hybridization> tag;
  std::optional<bool> aromatic;
  std::optional<int> degree;  // non-hydrogen degree
  std::optional<std::string> hydrogen_parent;
  std::string label;
};

class ColoringScheme {
 public:
  ColoringScheme(std::string name, std::vector<ColorRule> rules)
      : name_(std::move(name)), rules_(std::move(rules)) {}

  const std::string &name() const { return name_; }
  const std::vector<ColorRule> &rules() const { return rules_; }

  /// Color for a heavy vertex. Throws UncoloredElement when no rule matches.
  std::string vertex_color(const VertexColor &vertex, int degree) const;

  /// Color for a hydrogen attached to `parent`; nullopt = not rendered.
  std::optional<std::string> hydrogen_color(const VertexColor &parent) const;

 private:
  std::string name_;
  std::vector<ColorRule> rules_;
};

/// Element + non-hydrogen-degree labels ("C2"); hydrogens unrendered.
const ColoringScheme &degree_scheme();

/// Aromaticity + hybridization labels ("aC", "C2" for sp2 carbon);
/// N-attached hydrogens rendered as "H_A".
const ColoringScheme &hybrid_scheme();

const ColoringScheme &builtin_scheme(const std::string &name);

/// Vertex-colored graph; hydrogen colors are cached per vertex so signature
/// rendering needs no scheme lookups.
struct ColoredGraph {
  MolecularGraph graph;
  std::vector<std::string> colors;
  std::vector<std::optional<std::string>> hydrogen_colors;
};

ColoredGraph color_graph(const MolecularGraph &g, const ColoringScheme &scheme);

struct AtomicSignature {
  int root = 0;
  int height = 0;
  std::string canonical;
};

/// Canonical string of the height-h ball around `root`. The ball is unfolded
/// into a tree by breadth-first layers (a vertex reachable along two shortest
/// paths appears once per parent); child subtrees are sorted by their own
/// rendered strings, bond-type prefix included ("=", "#", ":" for
/// double/triple/aromatic).
AtomicSignature atomic_signature(const ColoredGraph &colored, int root,
                                 int height);

/// Counts canonical height-h signatures over all root atoms; values sum to
/// the vertex count.
DescriptorVector signature_counts(const ColoredGraph &colored, int height);

/// Signature-descriptor property model: P = sum_i sum_d c_d * count_d.
struct SdModel {
  std::string property_name;
  std::map<std::pair<int, std::string>, double> coefficients;
  std::set<int> heights_used;
};

/// Counts must be supplied for every height the model uses.
double estimate_sd(const SdModel &model,
                   const std::map<int, DescriptorVector> &counts_per_height);

}  // namespace camd

#endif  // CAMD_SIGNATURE_HPP
