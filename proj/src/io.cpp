#include "qgraph/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgraph/abelian.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

Json base(const std::string& kind, const Metadata& meta) {
  Json doc = Json::object();
  doc["kind"] = kind;
  doc["schema_version"] = kSchemaVersion;
  doc["metadata"] = Json(meta);
  return doc;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput("JSON " + where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field \"" + key + "\"");
  return *it;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) bad(where + "/" + std::to_string(k), "expected an integer");
    out.push_back(j[k].get<int>());
  }
  return out;
}

void check_finite(const Json& j, const std::string& where) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) bad(where, "NaN and infinity are not allowed");
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) check_finite(j[k], where + "/" + std::to_string(k));
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) check_finite(it.value(), where + "/" + it.key());
  }
}

Json check_to_json(const Check& c) {
  return Json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}};
}

}  // namespace

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const cplx z : v) out.push_back(complex_to_json(z));
  return out;
}

cplx complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad(where, "expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) bad(where + "/0", "expected a non-empty row");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string wr = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) {
      bad(wr, "row has the wrong length (expected " + std::to_string(cols) + ")");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c], wr + "/" + std::to_string(c));
  }
  return m;
}

Json set_to_json(const QuantumSet& set) {
  if (set.has_blocks()) return Json{{"blocks", set.blocks()}};
  if (set.twist()) {
    return Json{{"group", Json{{"orders", set.twist()->orders}}},
                {"bicharacter", matrix_to_json(set.twist()->gen_values)}};
  }
  throw InvalidInput("set_to_json: set has neither blocks nor a group origin");
}

SetPtr set_from_json(const Json& j, double tol, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (j.contains("blocks")) {
    const auto blocks = int_list(j["blocks"], where + "/blocks");
    if (blocks.empty()) bad(where + "/blocks", "need at least one block");
    for (int b : blocks)
      if (b < 1) bad(where + "/blocks", "block sizes must be positive");
    return build_quantum_set(blocks, tol);
  }
  if (j.contains("group")) {
    const AbelianGroup g(int_list(field(j["group"], "orders", where + "/group"), where + "/group/orders"));
    const Bicharacter b = bicharacter_from_json(field(j, "bicharacter", where), g, tol);
    return twist_quantum_set(b, tol);
  }
  bad(where, "expected \"blocks\" or \"group\"");
}

Bicharacter bicharacter_from_json(const Json& j, const AbelianGroup& g, double tol) {
  return make_bicharacter(g, matrix_from_json(j, "/set/bicharacter"), tol);
}

Json set_document(const QuantumSet& set, const Metadata& meta) {
  Json doc = base("quantum-set", meta);
  doc["set"] = set_to_json(set);
  return doc;
}

Json graph_document(const QuantumGraph& g, const Metadata& meta) {
  Metadata m = meta;
  m["weighted"] = g.weighted ? "true" : "false";
  Json doc = base("quantum-graph", m);
  doc["set"] = set_to_json(*g.set);
  doc["adjacency"] = matrix_to_json(g.adjacency);
  return doc;
}

Json operator_document(const Operator& op, const Metadata& meta) {
  Json doc = base("operator", meta);
  doc["domain"] = set_to_json(*op.domain);
  doc["codomain"] = set_to_json(*op.codomain);
  doc["matrix"] = matrix_to_json(op.matrix);
  return doc;
}

Json projection_document(const EdgeProjection& p, const Metadata& meta) {
  Json doc = base("edge-projection", meta);
  doc["set"] = set_to_json(*p.set);
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(matrix_to_json(b));
  doc["blocks"] = std::move(blocks);
  return doc;
}

Json bicharacter_document(const Bicharacter& b, const Metadata& meta) {
  Json doc = base("bicharacter", meta);
  doc["set"] = Json{{"group", Json{{"orders", b.group().orders()}}}, {"bicharacter", matrix_to_json(b.gen_values())}};
  return doc;
}

Json report_document(const Report& r, const Metadata& meta) {
  Json doc = base("report", meta);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  doc["checks"] = std::move(checks);
  doc["passed"] = r.passed();
  return doc;
}

Json graph_report_document(const QuantumSet& set, const GraphReport& g, const Report& checks, const Metadata& meta) {
  Json doc = report_document(checks, meta);
  doc["set"] = set_to_json(set);
  Json gr = Json::object();
  gr["is_graph"] = g.is_graph;
  gr["is_undirected"] = g.is_undirected;
  gr["loop_status"] = to_string(g.loop_status);
  gr["is_simple"] = g.is_simple;
  gr["is_multigraph"] = g.is_multigraph;
  gr["vertices"] = g.vertices;
  gr["edges"] = complex_to_json(g.edges);
  gr["edges_imaginary"] = g.edges_imaginary;
  gr["quantum_edges"] = g.quantum_edges ? Json(*g.quantum_edges) : Json(nullptr);
  gr["regular_degree"] = g.regular_degree ? Json(*g.regular_degree) : Json(nullptr);
  doc["graph"] = std::move(gr);
  return doc;
}

Json certificate_document(const QuantumSet& set, const ObstructionResult& r, const Metadata& meta) {
  Json doc = base("certificate", meta);
  doc["set"] = set_to_json(set);
  doc["closure_dim"] = r.closure_dim;
  doc["rounds"] = r.rounds;
  doc["partial"] = r.partial;
  doc["max_residual"] = r.max_residual;
  doc["threshold"] = kCertificateThreshold;
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    doc["verdict"] = "obstructed";
    doc["residual"] = c.residual;
    doc["x"] = Json{{"trace", c.x_trace}, {"matrix", matrix_to_json(c.x.matrix)}};
    doc["y"] = Json{{"trace", c.y_trace}, {"matrix", matrix_to_json(c.y.matrix)}};
  } else {
    doc["verdict"] = "inconclusive";
  }
  return doc;
}

void expect_kind(const Json& doc, const std::string& kind) {
  const Json& k = field(doc, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind) {
    bad("/kind", "expected \"" + kind + "\", got " + k.dump());
  }
  const Json& v = field(doc, "schema_version", "");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
    bad("/schema_version", "unsupported version " + v.dump());
  }
}

QuantumGraph graph_from_document(const Json& doc, double tol) {
  expect_kind(doc, "quantum-graph");
  SetPtr set = set_from_json(field(doc, "set", ""), tol);
  Matrix a = matrix_from_json(field(doc, "adjacency", ""), "/adjacency");
  if (a.rows() != set->N() || a.cols() != set->N()) {
    bad("/adjacency", "must be " + std::to_string(set->N()) + "x" + std::to_string(set->N()));
  }
  bool weighted = false;
  if (doc.contains("metadata") && doc["metadata"].is_object() && doc["metadata"].contains("weighted")) {
    weighted = doc["metadata"]["weighted"] == "true";
  }
  return {std::move(set), std::move(a), weighted};
}

Operator operator_from_document(const Json& doc, double tol) {
  expect_kind(doc, "operator");
  SetPtr dom = set_from_json(field(doc, "domain", ""), tol, "/domain");
  SetPtr cod = set_from_json(field(doc, "codomain", ""), tol, "/codomain");
  Matrix m = matrix_from_json(field(doc, "matrix", ""), "/matrix");
  if (m.rows() != cod->N() || m.cols() != dom->N()) {
    bad("/matrix", "must be " + std::to_string(cod->N()) + "x" + std::to_string(dom->N()));
  }
  return {std::move(dom), std::move(cod), std::move(m)};
}

EdgeProjection projection_from_document(const Json& doc, double tol) {
  expect_kind(doc, "edge-projection");
  SetPtr set = set_from_json(field(doc, "set", ""), tol);
  if (!set->has_blocks()) bad("/set", "edge projections need a set given by matrix blocks");
  const Json& blocks = field(doc, "blocks", "");
  const auto& bl = set->blocks();
  if (!blocks.is_array() || blocks.size() != bl.size() * bl.size()) {
    bad("/blocks", "expected " + std::to_string(bl.size() * bl.size()) + " blocks");
  }
  EdgeProjection p{set, {}};
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string where = "/blocks/" + std::to_string(k);
    Matrix m = matrix_from_json(blocks[k], where);
    const auto d = static_cast<std::size_t>(bl[k / bl.size()] * bl[k % bl.size()]);
    if (m.rows() != d || m.cols() != d) bad(where, "must be " + std::to_string(d) + "x" + std::to_string(d));
    p.blocks.push_back(std::move(m));
  }
  return p;
}

Json parse_document(const std::string& text, const std::string& source) {
  try {
    Json doc = Json::parse(text);
    check_finite(doc, "");
    return doc;
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ": malformed JSON at line " << line << ", column " << col << " (byte " << e.byte << ")";
    throw InvalidInput(os.str());
  }
}

Json read_document(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return parse_document(buf.str(), "<stdin>");
  }
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  buf << f.rdbuf();
  return parse_document(buf.str(), path);
}

std::string dump_document(const Json& doc) {
  check_finite(doc, "");
  return doc.dump(2) + "\n";
}

}  // namespace qgraph
