//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/feasibility.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "camd/error.hpp"

namespace camd {

std::vector<std::string> render_check_lines(
    const std::vector<CheckLine> &checks) {
  std::vector<std::string> out;
  out.reserve(checks.size());
  for (const CheckLine &c : checks) {
    out.push_back(c.name + " " + (c.ok ? "pass" : "fail") + " " +
                  std::to_string(c.residual));
  }
  return out;
}

// ---------------------------------------------------------------------------
// GC feasibility
// ---------------------------------------------------------------------------

bool GcFeasibilityReport::ok() const {
  if (!valence_balance_ok || !aromatic_balance_ok || !aromatic_atom_ok)
    return false;
  for (const auto &[name, flag] : sufficiency_ok)
    if (!flag) return false;
  return true;
}

std::vector<CheckLine> GcFeasibilityReport::checks() const {
  std::vector<CheckLine> out;
  out.push_back({"valence_balance", valence_balance_ok, valence_residual});
  if (aromatic_checked) {
    out.push_back(
        {"aromatic_balance", aromatic_balance_ok, aromatic_balance_lhs});
    out.push_back({"aromatic_atoms", aromatic_atom_ok, aromatic_atom_residual});
  }
  for (const auto &[name, flag] : sufficiency_ok)
    out.push_back({"sufficiency[" + name + "]", flag,
                   sufficiency_slack.at(name)});
  return out;
}

namespace {

void require_groups_known(const DescriptorVector &n, const GroupLibrary &lib) {
  for (const auto &[id, count] : n.counts()) lib.at(id);  // throws
}

}  // namespace

GcFeasibilityReport check_gc_basic(const DescriptorVector &n,
                                   const GroupLibrary &lib, int m) {
  if (m < -1 || m > 1)
    throw Error(ErrorCode::InvalidArgument, "m must be one of -1, 0, 1");
  require_groups_known(n, lib);

  GcFeasibilityReport report;
  report.m = m;
  report.total_count = n.total();

  long long lhs = 0;
  for (const auto &[id, count] : n.counts())
    lhs += static_cast<long long>(2 - lib.at(id).phi_ali) * count;
  report.balance_lhs = lhs;
  report.balance_rhs = -2 * m;
  report.valence_residual = lhs - report.balance_rhs;
  report.valence_balance_ok = report.valence_residual == 0;

  for (const auto &[id, count] : n.counts()) {
    long long required =
        static_cast<long long>(count) * (lib.at(id).phi_ali - 1) + 2;
    report.sufficiency_required[id] = required;
    report.sufficiency_slack[id] = report.total_count - required;
    report.sufficiency_ok[id] = report.total_count >= required;
  }
  return report;
}

GcFeasibilityReport check_gc_aromatic(const DescriptorVector &n,
                                      const GroupLibrary &lib, int rings_arom,
                                      int rings_ali) {
  if (rings_arom < 0 || rings_ali < 0)
    throw Error(ErrorCode::InvalidArgument, "ring counts must be >= 0");
  require_groups_known(n, lib);

  GcFeasibilityReport report;
  report.m = rings_ali - 1;  // aliphatic-balance analogue of the m cases
  report.total_count = n.total();

  long long ali_lhs = 0, arom_lhs = 0, arom_atoms = 0, rho_sum = 0;
  long long ali_count = 0, arom_count = 0;
  for (const auto &[id, count] : n.counts()) {
    const Group &g = lib.at(id);
    if (g.phi_ali > 0) {
      ali_lhs += static_cast<long long>(2 - g.phi_ali) * count;
      ali_count += count;
    }
    if (g.phi_arom > 0) {
      arom_lhs += static_cast<long long>(2 - g.phi_arom) * count;
      arom_count += count;
    }
    if (g.aromatic_atom_count > 0) {
      arom_atoms += static_cast<long long>(g.aromatic_atom_count) * count;
      rho_sum += static_cast<long long>(g.rho) * count;
    }
  }

  report.balance_lhs = ali_lhs;
  report.balance_rhs = 2 - 2LL * rings_ali + 2 * rho_sum - 2LL * rings_arom;
  report.valence_residual = report.balance_lhs - report.balance_rhs;
  report.valence_balance_ok = report.valence_residual == 0;
  report.aromatic_checked = true;
  report.aromatic_balance_lhs = arom_lhs;
  report.aromatic_balance_ok = arom_lhs == 0;
  report.aromatic_atom_residual = arom_atoms - 6LL * rings_arom;
  report.aromatic_atom_ok = report.aromatic_atom_residual == 0;

  for (const auto &[id, count] : n.counts()) {
    const Group &g = lib.at(id);
    if (g.phi_ali > 0) {
      long long required =
          static_cast<long long>(count) * (g.phi_ali - 1) + 2;
      report.sufficiency_required["ali:" + id] = required;
      report.sufficiency_slack["ali:" + id] = ali_count - required;
      report.sufficiency_ok["ali:" + id] = ali_count >= required;
    }
    if (g.phi_arom > 0) {
      long long required =
          static_cast<long long>(count) * (g.phi_arom - 1) + 2;
      report.sufficiency_required["arom:" + id] = required;
      report.sufficiency_slack["arom:" + id] = arom_count - required;
      report.sufficiency_ok["arom:" + id] = arom_count >= required;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// TI feasibility
// ---------------------------------------------------------------------------

void TiAssignment::validate() const {
  const int v_count = num_vertices();
  const int l_count = num_types();
  if (y.cols() != l_count)
    throw Error(ErrorCode::InvalidArgument, "y column count != type count");
  for (int v = 0; v < v_count; ++v) {
    int row = 0;
    for (int l = 0; l < l_count; ++l) {
      if (y(v, l) != 0 && y(v, l) != 1)
        throw Error(ErrorCode::InvalidArgument, "y entries must be binary");
      row += y(v, l);
    }
    if (row != 1)
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " needs exactly one type");
  }
  for (const auto &mat : a) {
    if (mat.rows() != v_count || mat.cols() != v_count)
      throw Error(ErrorCode::InvalidArgument, "bond tensor shape mismatch");
  }
  for (int v = 0; v < v_count; ++v) {
    for (int w = 0; w < v_count; ++w) {
      int total = 0;
      for (const auto &mat : a) {
        int bit = mat(v, w);
        if (bit != 0 && bit != 1)
          throw Error(ErrorCode::InvalidArgument, "a entries must be binary");
        if (mat(v, w) != mat(w, v))
          throw Error(ErrorCode::InvalidArgument, "a must be symmetric");
        total += bit;
      }
      if (v == w && total != 0)
        throw Error(ErrorCode::InvalidArgument, "self-bonds are not allowed");
      if (total > 1)
        throw Error(ErrorCode::InvalidArgument,
                    "at most one bond type per vertex pair");
    }
  }
}

TiAssignment ti_assignment_from_graph(const MolecularGraph &g) {
  const int n = g.num_vertices();
  // bond profile per vertex: count of single/double/triple bonds
  std::vector<std::array<int, 3>> profile(n, {0, 0, 0});
  for (const Edge &e : g.edges()) {
    if (e.type == BondType::Aromatic)
      throw Error(ErrorCode::InvalidArgument,
                  "aromatic bonds are outside the b in {1,2,3} formulation");
    int b = static_cast<int>(e.type) - 1;
    ++profile[e.v][b];
    ++profile[e.w][b];
  }

  TiAssignment t;
  std::map<std::string, int> type_index;
  std::vector<int> vertex_type(n);
  for (int v = 0; v < n; ++v) {
    const VertexColor &c = g.vertex(v);
    std::string name = c.element + std::to_string(c.attached_hydrogens) + ":" +
                       std::to_string(profile[v][0]) + "," +
                       std::to_string(profile[v][1]) + "," +
                       std::to_string(profile[v][2]);
    auto it = type_index.find(name);
    if (it == type_index.end()) {
      TiNodeType type;
      type.name = name;
      type.phi = profile[v];
      type.delta = profile[v][0] + profile[v][1] + profile[v][2];
      it = type_index.emplace(name, static_cast<int>(t.node_types.size()))
               .first;
      t.node_types.push_back(type);
    }
    vertex_type[v] = it->second;
  }
  TiNodeType dummy;
  dummy.name = "dummy";
  dummy.dummy = true;
  t.node_types.push_back(dummy);

  const int l_count = static_cast<int>(t.node_types.size());
  t.y = Eigen::MatrixXi::Zero(n, l_count);
  for (int v = 0; v < n; ++v) t.y(v, vertex_type[v]) = 1;
  for (auto &mat : t.a) mat = Eigen::MatrixXi::Zero(n, n);
  for (const Edge &e : g.edges()) {
    int b = static_cast<int>(e.type) - 1;
    t.a[b](e.v, e.w) = 1;
    t.a[b](e.w, e.v) = 1;
  }
  return t;
}

bool TiFeasibilityReport::ok() const {
  for (const CheckLine &c : check_lines)
    if (!c.ok) return false;
  return true;
}

TiFeasibilityReport check_ti_feasibility(const TiAssignment &t) {
  TiFeasibilityReport report;
  const int v_count = t.num_vertices();
  const int l_count = t.num_types();

  // structural sanity of the tensor itself (reported, not thrown)
  {
    bool pair_ok = true, sym_ok = true;
    long long worst = 0;
    for (int v = 0; v < v_count; ++v) {
      for (int w = 0; w < v_count; ++w) {
        int total = 0;
        for (const auto &mat : t.a) {
          total += mat(v, w);
          if (mat(v, w) != mat(w, v)) sym_ok = false;
        }
        int limit = v == w ? 0 : 1;
        if (total > limit) {
          pair_ok = false;
          worst = std::max<long long>(worst, total - limit);
        }
      }
    }
    report.check_lines.push_back({"pair_multiplicity", pair_ok, worst});
    report.check_lines.push_back({"symmetry", sym_ok, sym_ok ? 0 : 1});
  }

  // per-vertex per-bond-type valence balance
  for (int v = 0; v < v_count; ++v) {
    for (int b = 0; b < 3; ++b) {
      long long lhs = t.a[b].row(v).sum();
      long long rhs = 0;
      for (int l = 0; l < l_count; ++l)
        rhs += static_cast<long long>(t.node_types[l].phi[b]) * t.y(v, l);
      report.check_lines.push_back({"valence[v" + std::to_string(v + 1) +
                                        ",b=" + std::to_string(b + 1) + "]",
                                    lhs == rhs, lhs - rhs});
    }
  }

  // connectivity: every non-dummy vertex beyond the first bonds to a
  // lower-indexed vertex
  for (int v = 1; v < v_count; ++v) {
    long long lhs = 0;
    for (int w = 0; w < v; ++w)
      for (const auto &mat : t.a) lhs += mat(w, v);
    long long rhs = 0;
    for (int l = 0; l < l_count; ++l)
      if (!t.node_types[l].dummy) rhs += t.y(v, l);
    report.check_lines.push_back(
        {"connect[v" + std::to_string(v + 1) + "]", lhs >= rhs, lhs - rhs});
  }
  return report;
}

// ---------------------------------------------------------------------------
// SD feasibility
// ---------------------------------------------------------------------------

namespace {

struct SigNode {
  std::string color;
  int order = 1;  // bond order to parent
  std::vector<SigNode> children;
};

bool is_color_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

SigNode parse_node(const std::string &s, size_t &pos) {
  SigNode node;
  while (pos < s.size() && is_color_char(s[pos])) node.color += s[pos++];
  if (node.color.empty())
    throw Error(ErrorCode::ParseError,
                "bad signature '" + s + "' at position " +
                    std::to_string(pos));
  while (pos < s.size() && s[pos] == '(') {
    ++pos;
    SigNode child;
    int order = 1;
    if (pos < s.size() && (s[pos] == '=' || s[pos] == '#' || s[pos] == ':')) {
      order = s[pos] == '=' ? 2 : s[pos] == '#' ? 3 : 1;
      ++pos;
    }
    child = parse_node(s, pos);
    child.order = order;
    if (pos >= s.size() || s[pos] != ')')
      throw Error(ErrorCode::ParseError,
                  "unbalanced parentheses in signature '" + s + "'");
    ++pos;
    node.children.push_back(std::move(child));
  }
  return node;
}

int node_depth(const SigNode &node) {
  int deepest = 0;
  for (const SigNode &child : node.children)
    deepest = std::max(deepest, node_depth(child) + 1);
  return deepest;
}

bool is_hydrogen_color(const std::string &color) {
  return color == "H" || color.rfind("H_", 0) == 0;
}

std::optional<int> trailing_degree(const std::string &color) {
  size_t end = color.size();
  size_t begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(color[begin - 1])))
    --begin;
  if (begin == end || begin == 0) return std::nullopt;
  return std::stoi(color.substr(begin));
}

}  // namespace

SignatureShape parse_signature_shape(const std::string &signature) {
  size_t pos = 0;
  SigNode root = parse_node(signature, pos);
  if (pos != signature.size())
    throw Error(ErrorCode::ParseError,
                "trailing characters in signature '" + signature + "'");

  SignatureShape shape;
  shape.root_color = root.color;
  shape.depth = node_depth(root);
  std::optional<int> root_degree = trailing_degree(root.color);
  for (const SigNode &child : root.children) {
    if (is_hydrogen_color(child.color)) continue;  // not heavy atoms
    shape.bond_class += child.order;
    if (child.order == 2) ++shape.double_children;
    if (child.order == 3) ++shape.triple_children;
    shape.child_colors[child.color] += 1;
    std::optional<int> child_degree = trailing_degree(child.color);
    if (root_degree && child_degree && *child_degree >= *root_degree)
      shape.omega[child.color] += 1;
  }
  return shape;
}

SdConstraintData derive_sd_constraints(
    const std::vector<std::string> &signatures, int height, RingCounts rings) {
  if (height < 0)
    throw Error(ErrorCode::InvalidArgument, "height must be >= 0");
  SdConstraintData data;
  data.height = height;
  data.rings = rings;
  for (const std::string &sig : signatures) {
    SignatureShape shape = parse_signature_shape(sig);
    if (shape.depth > height)
      throw Error(ErrorCode::HeightMismatch,
                  "signature '" + sig + "' is deeper than height " +
                      std::to_string(height));
    data.shapes.emplace(sig, std::move(shape));
  }
  return data;
}

bool SdFeasibilityReport::ok() const {
  for (const CheckLine &c : check_lines)
    if (!c.ok) return false;
  return true;
}

SdFeasibilityReport check_sd_feasibility(const DescriptorVector &n,
                                         const SdConstraintData &data) {
  for (const auto &[sig, count] : n.counts()) {
    if (!data.shapes.count(sig))
      throw Error(ErrorCode::HeightMismatch,
                  "signature '" + sig + "' missing from constraint data");
  }

  SdFeasibilityReport report;

  // handshaking lemma with the half-double-bond correction kept integral:
  //   sum_k k * |S_k| = 2*sum(n) + |B_D1| + 2|B_D2| + 2|B_T1| - 2 + 2(R_ar+R_al)
  long long lhs = 0, total = 0, d1 = 0, d2 = 0, t1 = 0;
  for (const auto &[sig, count] : n.counts()) {
    const SignatureShape &shape = data.shapes.at(sig);
    lhs += static_cast<long long>(shape.bond_class) * count;
    total += count;
    if (shape.double_children == 1) d1 += count;
    if (shape.double_children == 2) d2 += count;
    if (shape.triple_children == 1) t1 += count;
  }
  long long rhs = 2 * total + d1 + 2 * d2 + 2 * t1 - 2 +
                  2LL * (data.rings.aromatic + data.rings.aliphatic);
  report.check_lines.push_back({"handshake", lhs == rhs, lhs - rhs});

  // coloring-sequence totals per ordered pair
  std::map<std::pair<std::string, std::string>, long long> sequences;
  for (const auto &[sig, count] : n.counts()) {
    const SignatureShape &shape = data.shapes.at(sig);
    for (const auto &[child, times] : shape.child_colors)
      sequences[{shape.root_color, child}] +=
          static_cast<long long>(times) * count;
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto &[pair, value] : sequences) {
    const auto &[o, o_prime] = pair;
    if (o == o_prime) {
      report.check_lines.push_back({"parity[" + o + "->" + o + "]",
                                    value % 2 == 0, value % 2});
      continue;
    }
    auto key = o < o_prime ? pair : std::make_pair(o_prime, o);
    if (!seen.insert(key).second) continue;
    auto reverse = sequences.find({key.second, key.first});
    long long fw = sequences.count(key) ? sequences.at(key) : 0;
    long long bw = reverse == sequences.end() ? 0 : reverse->second;
    report.check_lines.push_back(
        {"beta_balance[" + key.first + "<->" + key.second + "]", fw == bw,
         fw - bw});
  }

  // parent availability: multiple same-colored children need that many roots
  std::set<std::pair<std::string, std::string>> combos;
  for (const auto &[sig, shape] : data.shapes) {
    for (const auto &[color, omega] : shape.omega)
      if (omega > 1) combos.insert({shape.root_color, color});
  }
  for (const auto &[root_color, child_color] : combos) {
    long long demand = 0, supply = 0;
    for (const auto &[sig, count] : n.counts()) {
      const SignatureShape &shape = data.shapes.at(sig);
      auto om = shape.omega.find(child_color);
      if (shape.root_color == root_color && om != shape.omega.end() &&
          om->second > 1)
        demand += static_cast<long long>(om->second) * count;
      if (shape.root_color == child_color &&
          shape.child_colors.count(root_color))
        supply += count;
    }
    report.check_lines.push_back(
        {"parent_availability[" + root_color + "->" + child_color + "]",
         demand <= supply, supply - demand});
  }
  return report;
}

}  // namespace camd
