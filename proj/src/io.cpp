//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "camd/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "camd/error.hpp"

namespace camd {

namespace {

namespace fs = std::filesystem;

struct Lines {
  std::string origin;
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // line no, tokens
  size_t cursor = 0;

  [[noreturn]] void fail(int line, const std::string &what) const {
    throw Error(ErrorCode::ParseError,
                origin + ":" + std::to_string(line) + ": " + what);
  }

  bool done() const { return cursor >= rows.size(); }
  const std::vector<std::string> &peek() const { return rows[cursor].second; }
  int line() const {
    return done() ? (rows.empty() ? 0 : rows.back().first) : rows[cursor].first;
  }
  std::vector<std::string> next() { return rows[cursor++].second; }
};

Lines tokenize(std::istream &in, const std::string &origin) {
  Lines lines;
  lines.origin = origin;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream stream(raw);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    if (!tokens.empty()) lines.rows.emplace_back(number, std::move(tokens));
  }
  return lines;
}

Lines tokenize_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return tokenize(in, path);
}

int to_int(const Lines &lines, int line, const std::string &token) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception &) {
    lines.fail(line, "expected an integer, got '" + token + "'");
  }
}

double to_double(const Lines &lines, int line, const std::string &token) {
  try {
    size_t used = 0;
    double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception &) {
    lines.fail(line, "expected a number, got '" + token + "'");
  }
}

// --- shared graph/fragment body parsing ---

struct GraphBody {
  std::vector<VertexColor> vertices;
  std::vector<Edge> edges;
  RingCounts rings;
};

GraphBody parse_graph_body(Lines &lines) {
  if (lines.done()) lines.fail(lines.line(), "empty graph file");
  int header_line = lines.line();
  std::vector<std::string> header = lines.next();
  if (header.size() != 7 || header[0] != "atoms" || header[2] != "edges" ||
      header[4] != "rings")
    lines.fail(header_line, "expected 'atoms N edges M rings A L'");
  int atom_count = to_int(lines, header_line, header[1]);
  int edge_count = to_int(lines, header_line, header[3]);
  GraphBody body;
  body.rings.aromatic = to_int(lines, header_line, header[5]);
  body.rings.aliphatic = to_int(lines, header_line, header[6]);

  body.vertices.resize(atom_count);
  std::vector<bool> seen(atom_count, false);
  for (int i = 0; i < atom_count; ++i) {
    if (lines.done()) lines.fail(lines.line(), "missing atom line");
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 5)
      lines.fail(line, "expected 'idx element open_valence h_count tag'");
    int idx = to_int(lines, line, row[0]);
    if (idx < 0 || idx >= atom_count) lines.fail(line, "atom index range");
    if (seen[idx]) lines.fail(line, "duplicate atom index");
    seen[idx] = true;
    try {
      body.vertices[idx] =
          make_vertex(row[1], to_int(lines, line, row[3]),
                      parse_hybridization(row[4]), to_int(lines, line, row[2]));
    } catch (const Error &e) {
      lines.fail(line, e.what());
    }
  }
  for (int i = 0; i < edge_count; ++i) {
    if (lines.done()) lines.fail(lines.line(), "missing edge line");
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 3) lines.fail(line, "expected 'v w order'");
    Edge e;
    e.v = to_int(lines, line, row[0]);
    e.w = to_int(lines, line, row[1]);
    try {
      e.type = parse_bond_type(row[2]);
    } catch (const Error &err) {
      lines.fail(line, err.what());
    }
    body.edges.push_back(e);
  }
  if (!lines.done()) lines.fail(lines.line(), "trailing content");
  return body;
}

}  // namespace

MolecularGraph parse_graph_text(std::istream &in, const std::string &origin) {
  Lines lines = tokenize(in, origin);
  GraphBody body = parse_graph_body(lines);
  return build_graph(std::move(body.vertices), std::move(body.edges),
                     body.rings);
}

MolecularGraph parse_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_graph_text(in, path);
}

std::string write_graph_text(const MolecularGraph &g) {
  std::string out = "atoms " + std::to_string(g.num_vertices()) + " edges " +
                    std::to_string(g.num_edges()) + " rings " +
                    std::to_string(g.ring_counts().aromatic) + " " +
                    std::to_string(g.ring_counts().aliphatic) + "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    const VertexColor &c = g.vertex(v);
    out += std::to_string(v) + " " + c.element + " " +
           std::to_string(c.open_valence) + " " +
           std::to_string(c.attached_hydrogens) + " " +
           std::string(hybridization_token(c.tag)) + "\n";
  }
  for (const Edge &e : g.edges()) {
    out += std::to_string(e.v) + " " + std::to_string(e.w) + " " +
           std::string(bond_type_token(e.type)) + "\n";
  }
  return out;
}

Fragment parse_fragment_file(const std::string &path) {
  Lines lines = tokenize_file(path);
  GraphBody body = parse_graph_body(lines);
  return Fragment(std::move(body.vertices), std::move(body.edges));
}

GroupLibrary parse_group_library(const std::string &path) {
  Lines lines = tokenize_file(path);
  if (lines.done())
    throw Error(ErrorCode::ParseError, path + ": empty library file");
  fs::path dir = fs::path(path).parent_path();
  GroupLibrary lib;
  while (!lines.done()) {
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 6)
      lines.fail(line,
                 "expected 'name phi_ali phi_arom aromatic_atoms rho "
                 "fragment_ref'");
    Group group;
    group.name = row[0];
    group.phi_ali = to_int(lines, line, row[1]);
    group.phi_arom = to_int(lines, line, row[2]);
    group.aromatic_atom_count = to_int(lines, line, row[3]);
    group.rho = to_int(lines, line, row[4]);
    if (row[5] != "-") {
      fs::path ref = dir / row[5];
      if (!fs::exists(ref))
        throw Error(ErrorCode::DanglingFragmentRef,
                    path + ":" + std::to_string(line) + ": fragment '" +
                        ref.string() + "' not found");
      group.atom_pattern = parse_fragment_file(ref.string());
    }
    try {
      lib.add(std::move(group));
    } catch (const Error &e) {
      if (e.code() == ErrorCode::DuplicateName)
        throw Error(ErrorCode::DuplicateName,
                    path + ":" + std::to_string(line) + ": " + e.what());
      throw;
    }
  }
  return lib;
}

DescriptorVector parse_counts_file(const std::string &path) {
  Lines lines = tokenize_file(path);
  DescriptorVector n;
  while (!lines.done()) {
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 2) lines.fail(line, "expected 'id count'");
    int count = to_int(lines, line, row[1]);
    if (count < 0) lines.fail(line, "counts must be >= 0");
    if (n.get(row[0]) != 0) lines.fail(line, "duplicate id '" + row[0] + "'");
    n.set(row[0], count);
  }
  return n;
}

namespace {

TransformSpec parse_transform(const Lines &lines, int line,
                              const std::vector<std::string> &row,
                              size_t offset) {
  TransformSpec t;
  const std::string &kind = row[offset];
  if (kind == "identity") {
    t.kind = Transform::Identity;
  } else if (kind == "exp") {
    t.kind = Transform::Exp;
  } else if (kind == "log") {
    t.kind = Transform::Log;
  } else if (kind == "reciprocal") {
    t.kind = Transform::Reciprocal;
  } else if (kind == "affine") {
    t.kind = Transform::Affine;
    if (row.size() != offset + 3)
      lines.fail(line, "affine transform needs two parameters");
    t.a = to_double(lines, line, row[offset + 1]);
    t.b = to_double(lines, line, row[offset + 2]);
    return t;
  } else {
    lines.fail(line, "unknown transform '" + kind + "'");
  }
  if (row.size() != offset + 1) lines.fail(line, "trailing transform tokens");
  return t;
}

}  // namespace

GcModel parse_gc_model_file(const std::string &path) {
  Lines lines = tokenize_file(path);
  GcModel model;
  bool any_level = false;
  LevelSets levels;
  while (!lines.done()) {
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row[0] == "property") {
      if (row.size() != 2) lines.fail(line, "property needs a name");
      model.property_name = row[1];
    } else if (row[0] == "transform") {
      if (row.size() < 2) lines.fail(line, "transform needs a kind");
      model.transform = parse_transform(lines, line, row, 1);
    } else if (row[0] == "groups") {
      while (!lines.done() && lines.peek()[0] != "end") {
        int gl = lines.line();
        std::vector<std::string> g = lines.next();
        if (g.size() != 3) lines.fail(gl, "expected 'name level coefficient'");
        if (model.coefficients.count(g[0]))
          throw Error(ErrorCode::DuplicateName,
                      path + ":" + std::to_string(gl) + ": group '" + g[0] +
                          "' listed twice");
        model.coefficients[g[0]] = to_double(lines, gl, g[2]);
        if (g[1] == "F") {
          levels.first.insert(g[0]);
          any_level = true;
        } else if (g[1] == "S") {
          levels.second.insert(g[0]);
          any_level = true;
        } else if (g[1] == "T") {
          levels.third.insert(g[0]);
          any_level = true;
        } else if (g[1] != "-") {
          lines.fail(gl, "level must be F, S, T or -");
        }
      }
      if (lines.done()) lines.fail(lines.line(), "missing 'end'");
      lines.next();  // end
    } else if (row[0] == "interactions") {
      while (!lines.done() && lines.peek()[0] != "end") {
        int il = lines.line();
        std::vector<std::string> t = lines.next();
        if (t.size() != 4)
          lines.fail(il, "expected 'g g_prime combiner coefficient'");
        InteractionTerm term;
        term.g = t[0];
        term.g_prime = t[1];
        if (t[2] == "product")
          term.combiner = InteractionCombiner::Product;
        else if (t[2] == "min")
          term.combiner = InteractionCombiner::Min;
        else if (t[2] == "both")
          term.combiner = InteractionCombiner::IndicatorBothPresent;
        else
          lines.fail(il, "combiner must be product, min or both");
        term.coefficient = to_double(lines, il, t[3]);
        model.interactions.push_back(std::move(term));
      }
      if (lines.done()) lines.fail(lines.line(), "missing 'end'");
      lines.next();
    } else {
      lines.fail(line, "unexpected token '" + row[0] + "'");
    }
  }
  if (model.property_name.empty())
    throw Error(ErrorCode::ParseError, path + ": missing property name");
  if (model.coefficients.empty())
    throw Error(ErrorCode::ParseError, path + ": missing groups table");
  if (any_level) model.level_sets = std::move(levels);
  return model;
}

SdModel parse_sd_model_file(const std::string &path) {
  Lines lines = tokenize_file(path);
  SdModel model;
  while (!lines.done()) {
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    if (row[0] == "property") {
      if (row.size() != 2) lines.fail(line, "property needs a name");
      model.property_name = row[1];
    } else if (row[0] == "signatures") {
      while (!lines.done() && lines.peek()[0] != "end") {
        int sl = lines.line();
        std::vector<std::string> s = lines.next();
        if (s.size() != 3)
          lines.fail(sl, "expected 'height signature coefficient'");
        int height = to_int(lines, sl, s[0]);
        if (height < 0) lines.fail(sl, "height must be >= 0");
        model.coefficients[{height, s[1]}] = to_double(lines, sl, s[2]);
        model.heights_used.insert(height);
      }
      if (lines.done()) lines.fail(lines.line(), "missing 'end'");
      lines.next();
    } else {
      lines.fail(line, "unexpected token '" + row[0] + "'");
    }
  }
  if (model.property_name.empty())
    throw Error(ErrorCode::ParseError, path + ": missing property name");
  return model;
}

TiAssignment parse_ti_assignment_file(const std::string &path) {
  Lines lines = tokenize_file(path);
  TiAssignment t;
  if (lines.done()) throw Error(ErrorCode::ParseError, path + ": empty file");

  int line = lines.line();
  std::vector<std::string> header = lines.next();
  if (header.size() != 2 || header[0] != "types")
    lines.fail(line, "expected 'types L'");
  int type_count = to_int(lines, line, header[1]);
  std::map<std::string, int> type_index;
  for (int i = 0; i < type_count; ++i) {
    int tl = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 6)
      lines.fail(tl, "expected 'name delta phi1 phi2 phi3 flag'");
    TiNodeType type;
    type.name = row[0];
    type.delta = to_int(lines, tl, row[1]);
    for (int b = 0; b < 3; ++b) type.phi[b] = to_int(lines, tl, row[2 + b]);
    if (row[5] == "dummy")
      type.dummy = true;
    else if (row[5] != "-")
      lines.fail(tl, "flag must be '-' or 'dummy'");
    if (type_index.count(type.name))
      throw Error(ErrorCode::DuplicateName,
                  path + ":" + std::to_string(tl) + ": type '" + type.name +
                      "' listed twice");
    type_index[type.name] = i;
    t.node_types.push_back(std::move(type));
  }

  line = lines.line();
  header = lines.next();
  if (header.size() != 2 || header[0] != "vertices")
    lines.fail(line, "expected 'vertices V'");
  int vertex_count = to_int(lines, line, header[1]);
  t.y = Eigen::MatrixXi::Zero(vertex_count, type_count);
  for (int i = 0; i < vertex_count; ++i) {
    int vl = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 2) lines.fail(vl, "expected 'index type-name'");
    int index = to_int(lines, vl, row[0]);
    if (index < 1 || index > vertex_count)
      lines.fail(vl, "vertex index out of range (1-based)");
    auto it = type_index.find(row[1]);
    if (it == type_index.end()) lines.fail(vl, "unknown type '" + row[1] + "'");
    t.y(index - 1, it->second) = 1;
  }

  line = lines.line();
  header = lines.next();
  if (header.size() != 2 || header[0] != "bonds")
    lines.fail(line, "expected 'bonds M'");
  int bond_count = to_int(lines, line, header[1]);
  for (auto &mat : t.a)
    mat = Eigen::MatrixXi::Zero(vertex_count, vertex_count);
  for (int i = 0; i < bond_count; ++i) {
    int bl = lines.line();
    std::vector<std::string> row = lines.next();
    if (row.size() != 3) lines.fail(bl, "expected 'v w b'");
    int v = to_int(lines, bl, row[0]);
    int w = to_int(lines, bl, row[1]);
    int b = to_int(lines, bl, row[2]);
    if (v < 1 || v > vertex_count || w < 1 || w > vertex_count || v == w)
      lines.fail(bl, "bond endpoints out of range");
    if (b < 1 || b > 3) lines.fail(bl, "bond type must be 1, 2 or 3");
    t.a[b - 1](v - 1, w - 1) = 1;
    t.a[b - 1](w - 1, v - 1) = 1;
  }
  if (!lines.done()) lines.fail(lines.line(), "trailing content");
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// problem files
// ---------------------------------------------------------------------------

ParsedProblem parse_problem(const std::string &path) {
  Lines lines = tokenize_file(path);
  fs::path dir = fs::path(path).parent_path();
  ParsedProblem parsed;
  DesignProblem &problem = parsed.base;
  problem.total_lower = 2;  // N^L default
  bool have_library = false, have_total = false, have_objective = false;

  // structured process terms, assembled into a callback at the end
  struct QuadTerm {
    bool on_mu = false;
    std::string name;
    double weight = 1.0;
    double center = 0.0;
  };
  std::vector<QuadTerm> process_terms;
  bool in_mixture = false, in_process = false;
  MixtureProblem mixture;
  ProcessProblem process;

  while (!lines.done()) {
    int line = lines.line();
    std::vector<std::string> row = lines.next();
    const std::string &key = row[0];

    if (in_mixture) {
      if (key == "end") {
        in_mixture = false;
      } else if (key == "components") {
        if (row.size() != 2) lines.fail(line, "components needs a count");
        mixture.component_count = to_int(lines, line, row[1]);
      } else if (key == "qtarget") {
        if (row.size() != 4)
          lines.fail(line, "expected 'qtarget property value weight'");
        mixture.q_targets.push_back({row[1], to_double(lines, line, row[2]),
                                     to_double(lines, line, row[3])});
      } else if (key == "qbound") {
        if (row.size() != 4)
          lines.fail(line, "expected 'qbound property lo hi'");
        Bounds b{to_double(lines, line, row[2]),
                 to_double(lines, line, row[3])};
        if (b.lo > b.hi)
          throw Error(ErrorCode::InconsistentBounds,
                      path + ":" + std::to_string(line) + ": qbound lo > hi");
        mixture.q_bounds[row[1]] = b;
      } else if (key == "deviation") {
        if (row.size() != 2 || (row[1] != "absolute" && row[1] != "squared"))
          lines.fail(line, "deviation must be absolute or squared");
        mixture.deviation = row[1] == "squared" ? DeviationType::Squared
                                                : DeviationType::Absolute;
      } else if (key == "mixing") {
        if (row.size() != 2 || row[1] != "ideal")
          lines.fail(line, "only the built-in 'ideal' mixing is file-level");
      } else {
        lines.fail(line, "unexpected mixture token '" + key + "'");
      }
      continue;
    }
    if (in_process) {
      if (key == "end") {
        in_process = false;
      } else if (key == "mu") {
        if (row.size() != 4) lines.fail(line, "expected 'mu name lo hi'");
        Bounds b{to_double(lines, line, row[2]),
                 to_double(lines, line, row[3])};
        if (b.lo > b.hi)
          throw Error(ErrorCode::InconsistentBounds,
                      path + ":" + std::to_string(line) + ": mu lo > hi");
        process.mu_names.push_back(row[1]);
        process.mu_bounds[row[1]] = b;
      } else if (key == "pterm" || key == "muterm") {
        if (row.size() != 4)
          lines.fail(line, "expected 'pterm|muterm name weight center'");
        process_terms.push_back({key == "muterm", row[1],
                                 to_double(lines, line, row[2]),
                                 to_double(lines, line, row[3])});
      } else {
        lines.fail(line, "unexpected process token '" + key + "'");
      }
      continue;
    }

    if (key == "library") {
      if (row.size() != 2) lines.fail(line, "library needs a path");
      problem.library = parse_group_library((dir / row[1]).string());
      have_library = true;
    } else if (key == "model") {
      if (row.size() != 2) lines.fail(line, "model needs a path");
      problem.models.push_back(parse_gc_model_file((dir / row[1]).string()));
    } else if (key == "total") {
      if (row.size() != 3) lines.fail(line, "expected 'total NL NU'");
      problem.total_lower = to_int(lines, line, row[1]);
      problem.total_upper = to_int(lines, line, row[2]);
      have_total = true;
    } else if (key == "nbound") {
      if (row.size() != 4) lines.fail(line, "expected 'nbound group lo hi'");
      IntBounds b{to_int(lines, line, row[2]), to_int(lines, line, row[3])};
      problem.descriptor_bounds[row[1]] = b;
    } else if (key == "pbound") {
      if (row.size() != 4) lines.fail(line, "expected 'pbound property lo hi'");
      Bounds b{to_double(lines, line, row[2]), to_double(lines, line, row[3])};
      if (b.lo > b.hi)
        throw Error(ErrorCode::InconsistentBounds,
                    path + ":" + std::to_string(line) + ": pbound lo > hi");
      problem.property_bounds[row[1]] = b;
    } else if (key == "fixed") {
      if (row.size() != 3) lines.fail(line, "expected 'fixed group min'");
      problem.fixed_minimum[row[1]] = to_int(lines, line, row[2]);
    } else if (key == "m") {
      if (row.size() != 2) lines.fail(line, "expected 'm -1|0|1|any'");
      if (row[1] == "any")
        problem.ring_parameter.reset();
      else
        problem.ring_parameter = to_int(lines, line, row[1]);
    } else if (key == "cap") {
      if (row.size() != 2) lines.fail(line, "expected 'cap N'");
      problem.enumeration_cap = to_int(lines, line, row[1]);
    } else if (key == "seed") {
      if (row.size() != 2) lines.fail(line, "expected 'seed N'");
      parsed.seed = static_cast<uint64_t>(to_int(lines, line, row[1]));
    } else if (key == "objective") {
      have_objective = true;
      if (row.size() < 2) lines.fail(line, "objective needs a mode");
      if (row[1] == "feasibility") {
        problem.objective.mode = ObjectiveMode::Feasibility;
      } else if (row[1] == "target") {
        problem.objective.mode = ObjectiveMode::Target;
        if (row.size() == 3) {
          if (row[2] == "squared")
            problem.objective.deviation = DeviationType::Squared;
          else if (row[2] == "absolute")
            problem.objective.deviation = DeviationType::Absolute;
          else
            lines.fail(line, "deviation must be absolute or squared");
        }
      } else if (row[1] == "direct") {
        problem.objective.mode = ObjectiveMode::Direct;
        if (row.size() == 3) {
          if (row[2] == "maximize")
            problem.objective.maximize = true;
          else if (row[2] != "minimize")
            lines.fail(line, "direct objective is minimize or maximize");
        }
      } else {
        lines.fail(line, "unknown objective mode '" + row[1] + "'");
      }
    } else if (key == "target") {
      if (row.size() != 4)
        lines.fail(line, "expected 'target property value weight'");
      problem.objective.targets.push_back({row[1],
                                           to_double(lines, line, row[2]),
                                           to_double(lines, line, row[3])});
    } else if (key == "linear") {
      if (row.size() != 3) lines.fail(line, "expected 'linear property coeff'");
      problem.objective.linear.push_back(
          {row[1], to_double(lines, line, row[2])});
    } else if (key == "quadratic") {
      if (row.size() != 4)
        lines.fail(line, "expected 'quadratic property weight center'");
      problem.objective.quadratic.push_back({row[1],
                                             to_double(lines, line, row[2]),
                                             to_double(lines, line, row[3])});
    } else if (key == "mixture") {
      if (row.size() != 2 || row[1] != "begin")
        lines.fail(line, "expected 'mixture begin'");
      in_mixture = true;
      parsed.mixture = MixtureProblem{};  // placeholder; filled at the end
    } else if (key == "process") {
      if (row.size() != 2 || row[1] != "begin")
        lines.fail(line, "expected 'process begin'");
      in_process = true;
      parsed.process = ProcessProblem{};
    } else {
      lines.fail(line, "unexpected token '" + key + "'");
    }
  }
  if (in_mixture || in_process)
    throw Error(ErrorCode::ParseError, path + ": unterminated section");
  if (!have_library)
    throw Error(ErrorCode::ParseError, path + ": missing 'library'");
  if (!have_total)
    throw Error(ErrorCode::ParseError, path + ": missing 'total NL NU'");
  if (!have_objective) problem.objective.mode = ObjectiveMode::Feasibility;

  problem.validate();

  if (parsed.mixture) {
    mixture.bases = {problem};
    *parsed.mixture = std::move(mixture);
  }
  if (parsed.process) {
    process.process_fn = [terms = process_terms](const PropertyMap &p,
                                                 const PropertyMap &mu) {
      double sum = 0.0;
      for (const auto &t : terms) {
        const PropertyMap &source = t.on_mu ? mu : p;
        auto it = source.find(t.name);
        if (it == source.end())
          throw Error(ErrorCode::InvalidArgument,
                      "process term references unknown '" + t.name + "'");
        double d = it->second - t.center;
        sum += t.weight * d * d;
      }
      return sum;
    };
    *parsed.process = std::move(process);
  }
  return parsed;
}

}  // namespace camd
