#include "raagrep/io.hpp"

#include <algorithm>
#include <sstream>

namespace raagrep {

namespace {

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string vertex_name(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where, "vertex names must be strings or integers");
}

std::optional<std::size_t> edge_from_key(const Graph& k, const std::string& key) {
  for (std::size_t dash = key.find('-'); dash != std::string::npos; dash = key.find('-', dash + 1)) {
    const auto a = k.find_vertex(std::string_view(key).substr(0, dash));
    const auto b = k.find_vertex(std::string_view(key).substr(dash + 1));
    if (a && b) {
      if (auto e = k.edge_index(*a, *b)) return e;
    }
  }
  return std::nullopt;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "expected a number");
  return v.get<double>();
}

}  // namespace

GraphDocument parse_graph_document(const json& doc) {
  const json& vertices = require(doc, "vertices", "");
  if (!vertices.is_array()) throw ParseError("/vertices", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) names.push_back(vertex_name(vertices[i], "/vertices/" + std::to_string(i)));

  std::vector<Edge> edges;
  std::vector<std::string> seen(names);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ParseError("/vertices", "duplicate vertex name");
  auto index_of = [&](const std::string& n, const std::string& where) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError(where, "unknown vertex \"" + n + "\"");
    return static_cast<std::size_t>(it - names.begin());
  };
  const json empty = json::array();
  const json& edge_list = doc.contains("edges") ? doc.at("edges") : empty;
  if (!edge_list.is_array()) throw ParseError("/edges", "expected an array");
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const json& e = edge_list[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(where, "an edge is a pair [v, w]");
    const std::size_t a = index_of(vertex_name(e[0], where + "/0"), where + "/0");
    const std::size_t b = index_of(vertex_name(e[1], where + "/1"), where + "/1");
    if (a == b) throw ParseError(where, "loops are not allowed");
    const Edge norm{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), norm) != edges.end()) throw ParseError(where, "duplicate edge");
    edges.push_back(norm);
  }

  GraphDocument out{Graph(std::move(names), std::move(edges)), std::nullopt};
  if (doc.contains("marking") && !doc.at("marking").is_null()) out.marking = parse_marking(out.graph, doc.at("marking"));
  return out;
}

GraphDocument parse_graph_document_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  return parse_graph_document(doc);
}

EdgeMarking parse_marking(const Graph& k, const json& marking, const std::string& where) {
  if (!marking.is_object()) throw ParseError(where, "expected an object {\"v-w\": +1 | -1}");
  std::vector<std::optional<Sign>> signs(k.edge_count());
  for (const auto& [key, value] : marking.items()) {
    const std::string at = where + "/" + key;
    const auto e = edge_from_key(k, key);
    if (!e) throw ParseError(at, "not an edge of the graph");
    if (!value.is_number_integer() || (value.get<int>() != 1 && value.get<int>() != -1))
      throw ParseError(at, "mark must be +1 or -1");
    if (signs[*e]) throw ParseError(at, "edge marked twice");
    signs[*e] = sign_from_int(value.get<int>());
  }
  EdgeMarking out;
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    if (!signs[e]) throw ParseError(where, "edge " + k.edge_label(e) + " is not marked");
    out.push_back(*signs[e]);
  }
  return out;
}

EdgeMarking parse_marking_argument(const Graph& k, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("--marking byte " + std::to_string(e.byte), "invalid JSON");
    }
    return parse_marking(k, doc, "--marking");
  }
  if (text.size() != k.edge_count())
    throw ParseError("--marking", "expected " + std::to_string(k.edge_count()) + " signs, got " +
                                      std::to_string(text.size()));
  EdgeMarking out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      out.push_back(Sign::plus);
    } else if (text[i] == '-') {
      out.push_back(Sign::minus);
    } else {
      throw ParseError("--marking", "character " + std::to_string(i) + " is not '+' or '-'");
    }
  }
  return out;
}

json marking_to_json(const Graph& k, const EdgeMarking& m) {
  json out = json::object();
  for (std::size_t e = 0; e < k.edge_count(); ++e) out[k.edge_label(e)] = to_int(m.at(e));
  return out;
}

json graph_to_json(const Graph& k, const std::optional<EdgeMarking>& m) {
  json out;
  out["vertices"] = k.names();
  json edges = json::array();
  for (const Edge& e : k.edges()) edges.push_back({k.name(e.v), k.name(e.w)});
  out["edges"] = std::move(edges);
  if (m) out["marking"] = marking_to_json(k, *m);
  return out;
}

std::string to_dot(const Graph& k, const std::optional<EdgeMarking>& m) {
  std::ostringstream out;
  out << "graph K {\n";
  for (const auto& n : k.names()) out << "  \"" << n << "\";\n";
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    const Edge& ed = k.edge(e);
    out << "  \"" << k.name(ed.v) << "\" -- \"" << k.name(ed.w) << "\"";
    if (m) out << " [label=\"" << (m->at(e) == Sign::plus ? "+1" : "-1") << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json representation_to_json(const Graph& k, const Representation& x) {
  json out = json::object();
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    const Quaternion& q = x[v].rep().value();
    out[k.name(v)] = {q.x0, q.x1, q.x2, q.x3};
  }
  return out;
}

Representation parse_representation(const Graph& k, const json& doc) {
  if (!doc.is_object()) throw ParseError("", "expected an object {vertex: [x0, x1, x2, x3]}");
  const json& values = doc.contains("values") ? doc.at("values") : doc;
  Representation x;
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    const std::string where = "/" + k.name(v);
    if (!values.contains(k.name(v))) throw ParseError(where, "missing vertex");
    const json& q = values.at(k.name(v));
    if (!q.is_array() || q.size() != 4) throw ParseError(where, "expected 4 quaternion components");
    const Quaternion quat{number(q[0], where + "/0"), number(q[1], where + "/1"), number(q[2], where + "/2"),
                          number(q[3], where + "/3")};
    try {
      x.values.emplace_back(UnitQuaternion(quat, kDecideTol));
    } catch (const std::invalid_argument&) {
      throw ParseError(where, "not a unit quaternion");
    }
  }
  return x;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix parse_matrix(const json& doc, const std::string& where) {
  if (!doc.is_array() || doc.empty()) throw ParseError(where, "expected a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(doc.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    const json& row = doc[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw ParseError(rw, "matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::string cw = rw + "/" + std::to_string(c);
      const json& z = row[static_cast<std::size_t>(c)];
      if (z.is_number()) {
        m(r, c) = z.get<double>();
      } else if (z.is_array() && z.size() == 2) {
        m(r, c) = {number(z[0], cw + "/0"), number(z[1], cw + "/1")};
      } else {
        throw ParseError(cw, "entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

json matrix_representation_to_json(const Graph& k, const MatrixRepresentation& x) {
  json out = json::object();
  for (std::size_t v = 0; v < k.vertex_count(); ++v) out[k.name(v)] = matrix_to_json(x.values.at(v));
  return out;
}

MatrixRepresentation parse_matrix_representation(const Graph& k, const json& doc, GroupTag group) {
  if (!doc.is_object()) throw ParseError("", "expected an object {vertex: matrix}");
  const json& values = doc.contains("values") ? doc.at("values") : doc;
  MatrixRepresentation x{group, {}};
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    const std::string where = "/" + k.name(v);
    if (!values.contains(k.name(v))) throw ParseError(where, "missing vertex");
    x.values.push_back(parse_matrix(values.at(k.name(v)), where));
    if (x.values.back().rows() != x.values.front().rows()) throw ParseError(where, "matrices of mixed dimension");
    if (membership_residual(x.values.back(), group) > kDecideTol)
      throw ParseError(where, "matrix is not in " + to_string(group));
  }
  return x;
}

json step_to_json(const ReductionStep& s) {
  json out;
  out["rule"] = step_name(s);
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, step::VertexDeletion>) {
          out["vertex"] = st.vertex;
        } else if constexpr (std::is_same_v<T, step::EdgeContraction>) {
          out["edge"] = {st.v, st.w};
        } else if constexpr (std::is_same_v<T, step::EmptyByEdgeContraction2>) {
          out["edge"] = {st.v, st.w};
          out["witness"] = st.witness;
        } else if constexpr (std::is_same_v<T, step::ConnectedByDegeneracyOrdering>) {
          out["ordering"] = st.ordering;
        } else if constexpr (std::is_same_v<T, step::EmptyByK4Core>) {
          out["clique"] = st.clique;
        } else {
          out["vertices"] = st.vertices;
        }
      },
      s);
  return out;
}

json trace_to_json(const ReductionTrace& t) {
  json out = json::array();
  for (const auto& e : t) out.push_back(step_to_json(e.step));
  return out;
}

json fiber_to_json(const FiberClass& f) {
  if (f.verdict == FiberVerdict::ComponentCount) return {{"verdict", "ComponentCount"}, {"components", f.count}};
  return to_string(f);
}

json fiber_report(const Graph& k, const EdgeMarking& m, const Classification& c,
                  const std::optional<Representation>& witness) {
  json out;
  out["marking"] = marking_to_json(k, m);
  out["verdict"] = fiber_to_json(c.fiber);
  out["trace"] = trace_to_json(c.trace);
  out["witness"] = witness ? representation_to_json(k, *witness) : json(nullptr);
  return out;
}

BundleReport bundle_report(const Graph& k, bool require_3manifold_shape, const SweepOptions& opts) {
  BundleReport r;
  r.droms_3manifold_shape = droms_shape(k);
  if (require_3manifold_shape && !r.droms_3manifold_shape)
    throw ShapeViolation("graph is not a disjoint union of trees and triangles, so it is not the graph of a "
                         "3-manifold group");
  const auto rows = opts.jobs > 0 ? sweep_markings_parallel(k, opts) : sweep_markings_serial(k, opts);
  r.all_bundles_flat = true;
  for (const auto& row : rows) {
    BundleRecord rec{row.marking, row.fiber, std::nullopt};
    if (row.fiber.verdict != FiberVerdict::Unknown) rec.flat_exists = row.fiber.verdict != FiberVerdict::Empty;
    if (rec.flat_exists != true) r.all_bundles_flat = false;
    r.records.push_back(std::move(rec));
  }
  return r;
}

json bundle_report_to_json(const Graph& k, const BundleReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json row;
    row["marking"] = marking_to_json(k, rec.marking);
    row["flat_exists"] = rec.flat_exists ? json(*rec.flat_exists) : json(nullptr);
    row["fiber_class"] = fiber_to_json(rec.fiber);
    records.push_back(std::move(row));
  }
  json out;
  out["records"] = std::move(records);
  out["all_bundles_flat"] = r.all_bundles_flat;
  out["droms_3manifold_shape"] = r.droms_3manifold_shape;
  return out;
}

json path_samples_to_json(const Graph& k, const GroupPath& p, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  json out = json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
    out.push_back({{"t", t}, {"values", matrix_representation_to_json(k, p.eval(t))}});
  }
  return out;
}

}  // namespace raagrep
