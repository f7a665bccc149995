#include "qgraph/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "qgraph/abelian.hpp"
#include "qgraph/catalog.hpp"
#include "qgraph/clifford.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/io.hpp"
#include "qgraph/random.hpp"
#include "qgraph/weyl.hpp"

namespace qgraph {

namespace {

struct Outcome {
  Json doc;
  int code = kExitOk;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(what + ": '" + s + "' is not an integer");
  }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok, what));
  if (out.empty()) throw InvalidInput(what + ": empty list");
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& s, const std::string& what) {
  std::vector<std::size_t> out;
  for (int v : parse_int_list(s, what)) {
    if (v < 0) throw InvalidInput(what + ": indices must be non-negative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// "110;011" or "1,1,0;0,1,1". An empty string is the empty multiset.
std::vector<std::size_t> parse_elements(const std::string& s, const AbelianGroup& g) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ';')) {
    GroupElement e;
    if (tok.find(',') != std::string::npos) {
      e = parse_int_list(tok, "--gens");
    } else {
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw InvalidInput("--gens: bad digit '" + std::string(1, ch) + "' in '" + tok + "'");
        e.push_back(ch - '0');
      }
    }
    if (e.size() != g.rank()) {
      throw InvalidInput("--gens: element '" + tok + "' has " + std::to_string(e.size()) + " components, expected " +
                         std::to_string(g.rank()));
    }
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] < 0 || e[k] >= g.orders()[k]) {
        throw InvalidInput("--gens: component " + std::to_string(k + 1) + " of '" + tok + "' is out of range");
      }
    out.push_back(g.index(e));
  }
  return out;
}

Bicharacter resolve_bicharacter(const std::string& spec, const AbelianGroup& g, double tol, std::istream& in) {
  if (spec == "trivial") return trivial_bicharacter(g);
  if (spec == "clifford") {
    for (int o : g.orders())
      if (o != 2) throw InvalidInput("--bichar clifford needs every order to be 2");
    return clifford_bicharacter(static_cast<int>(g.rank()));
  }
  if (spec == "weyl") {
    if (g.rank() != 2 || g.orders()[0] != g.orders()[1]) throw InvalidInput("--bichar weyl needs orders n,n");
    return weyl_bicharacter(g.orders()[0]);
  }
  const Json doc = read_document(spec, in);
  if (doc.is_array()) return make_bicharacter(g, matrix_from_json(doc, ""), tol);
  expect_kind(doc, "bicharacter");
  const Json& set = doc.at("set");
  const AbelianGroup declared(set.at("group").at("orders").get<std::vector<int>>());
  if (!(declared == g)) throw InvalidInput("bicharacter file is for a different group");
  return bicharacter_from_json(set.at("bicharacter"), g, tol);
}

// Plain-text rendering of any document.
void render_text(const Json& doc, std::ostream& out) {
  const std::string kind = doc.value("kind", "");
  out << kind << "\n";
  if (doc.contains("set")) out << "  set: " << doc["set"].dump() << "\n";
  if (doc.contains("graph")) {
    for (const auto& [k, v] : doc["graph"].items()) out << "  " << std::left << std::setw(16) << k << v.dump() << "\n";
  }
  if (doc.contains("checks")) {
    for (const auto& c : doc["checks"]) {
      out << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] " << std::left << std::setw(32)
          << c["name"].get<std::string>() << " residual " << c["residual"].get<double>();
      const std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) out << "  " << detail;
      out << "\n";
    }
    out << "  overall: " << (doc["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
  }
  if (doc.contains("spectrum")) out << "  spectrum: " << doc["spectrum"].dump() << "\n";
  for (const char* key : {"adjacency", "matrix"}) {
    if (!doc.contains(key)) continue;
    out << "  " << key << ":\n";
    for (const auto& row : doc[key]) {
      out << "   ";
      for (const auto& z : row) {
        const double re = z[0].get<double>(), im = z[1].get<double>();
        std::ostringstream cell;
        cell << std::setprecision(4) << re;
        if (std::abs(im) > 1e-12) cell << (im < 0 ? "-" : "+") << std::abs(im) << "i";
        out << " " << std::setw(12) << cell.str();
      }
      out << "\n";
    }
  }
  if (doc.contains("blocks") && doc["blocks"].is_array() && kind == "edge-projection") {
    out << "  " << doc["blocks"].size() << " realigned blocks\n";
  }
  if (kind == "certificate") {
    out << "  verdict: " << doc["verdict"].get<std::string>() << "\n";
    out << "  closure dimension " << doc["closure_dim"] << " after " << doc["rounds"] << " rounds"
        << (doc["partial"].get<bool>() ? " (partial)" : "") << "\n";
    if (doc.contains("x")) {
      out << "  witnesses: " << doc["x"]["trace"].get<std::string>() << " and "
          << doc["y"]["trace"].get<std::string>() << "\n";
      out << "  residual " << doc["residual"].get<double>() << " > " << doc["threshold"].get<double>() << "\n";
    } else {
      out << "  max residual " << doc["max_residual"].get<double>()
          << "; a Schur-commutative closure does not prove the graph classical\n";
    }
  }
  if (doc.contains("metadata") && !doc["metadata"].empty()) out << "  metadata: " << doc["metadata"].dump() << "\n";
}

Report graph_checks(const QuantumGraph& g) {
  const QuantumSet& set = *g.set;
  const Matrix& a = g.adjacency;
  const double thr = set.tol() * scale_of({&a});
  Report r;
  r.add("schur-self-adjoint", max_abs_diff(schur_star(set, a), a), thr);
  if (g.weighted) {
    r.add_flag("edge-projection-positive", edge_projection_positive(g.set, a, set.tol()));
  } else {
    r.add("schur-idempotent", max_abs_diff(schur_product(set, a, a), a), thr);
  }
  return r;
}

SetPtr set_from_flags(const std::string& blocks, const std::string& orders, const std::string& bichar, double tol,
                      std::istream& in) {
  if (!blocks.empty()) return build_quantum_set(parse_int_list(blocks, "--blocks"), tol);
  const AbelianGroup g(parse_int_list(orders, "--orders"));
  return twist_quantum_set(resolve_bicharacter(bichar, g, tol, in), tol);
}

struct CatalogArgs {
  int n = 2;
  int m = 1;
  double t = std::numbers::pi / 4;
  int dim = 1;
  std::string gens;
};

Json catalog_document(const std::string& preset, const CatalogArgs& a, std::uint64_t seed, double tol) {
  const Metadata meta{{"preset", preset}};
  if (preset == "m2-empty") return graph_document(m2_graph(0), meta);
  if (preset == "m2-edge") return graph_document(m2_graph(1), meta);
  if (preset == "m2-two") return graph_document(m2_graph(2), meta);
  if (preset == "m2-full") return graph_document(m2_graph(3), meta);
  if (preset == "m2-partial") return graph_document(m2_partial_family(a.m, a.t), meta);
  if (preset == "anticommutative-square") return graph_document(anticommutative_square(), meta);
  if (preset == "gell-mann") return graph_document(gell_mann_graph(), meta);
  if (preset == "rook") return graph_document(quantum_rook(a.n), meta);
  if (preset == "hypercube" || preset == "folded" || preset == "squared") {
    return graph_document(cube_like_graph(a.n, parse_cube_preset(preset), tol), meta);
  }
  if (preset == "cube") {
    const AbelianGroup g(std::vector<int>(static_cast<std::size_t>(a.n), 2));
    return graph_document(cube_like_graph(a.n, parse_elements(a.gens, g), tol), meta);
  }
  if (preset == "halved") {
    const Matrix b = halved_adjacency(a.n);
    return graph_document({clifford_set(a.n + 1, tol).set, b, false}, meta);
  }
  if (preset == "random-su2") {
    Rng rng(seed);
    Metadata m = meta;
    m["seed"] = std::to_string(seed);
    return graph_document(graph_from_subspace(2, random_su2_subspace(rng, a.dim), tol), m);
  }
  if (preset == "diagonal-embedding") return operator_document(diagonal_embedding(a.n).map, meta);
  if (preset == "folded-embedding") return operator_document(folded_embedding(a.n), meta);
  if (preset == "weyl-phi") return operator_document(phi_isomorphism(a.n).phi, meta);
  if (preset == "hadamard-conjugation") {
    const double s = 1.0 / std::sqrt(2.0);
    return operator_document(conjugation_map(Matrix::from_rows({{s, s}, {s, -s}})), meta);
  }
  throw InvalidInput("unknown catalog preset '" + preset + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify finite quantum sets and quantum graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  double tol_flag = kDefaultTol;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Emit a JSON document instead of a table");
  CLI::Option* tol_opt = app.add_option("--tol", tol_flag, "Tolerance (overrides QG_TOL; default 1e-9)");
  app.add_option("--seed", seed, "Seed for randomized presets");

  std::string file, file2, file3, blocks, orders, gens, bichar = "trivial", keep;
  bool spectrum = false;
  std::size_t max_dim = 0;
  std::string preset;
  CatalogArgs cat;

  auto* set_check = app.add_subcommand("set-check", "Verify the Frobenius axioms of a quantum set");
  set_check->add_option("file", file, "quantum-set or quantum-graph document, or - for stdin");
  set_check->add_option("--blocks", blocks, "Matrix block sizes, e.g. 1,2");
  set_check->add_option("--orders", orders, "Group orders for a twisted set, e.g. 2,2");
  set_check->add_option("--bichar", bichar, "trivial, clifford, weyl or a JSON file");

  auto* graph_check = app.add_subcommand("graph-check", "Report on a quantum graph");
  graph_check->add_option("file", file, "quantum-graph document or -")->required();

  auto* rotate = app.add_subcommand("rotate", "Convert between adjacency and edge projection");
  rotate->add_option("file", file, "quantum-graph or edge-projection document or -")->required();

  auto* cayley = app.add_subcommand("cayley", "Classical Cayley graph of a finite abelian group");
  cayley->add_option("--orders", orders, "Cyclic orders, e.g. 2,2,2")->required();
  cayley->add_option("--gens", gens, "Generators, e.g. \"100;010;001\"")->required();
  cayley->add_flag("--spectrum", spectrum, "Emit the eigenvalues instead of the graph");

  auto* twist = app.add_subcommand("twist", "Twisted Cayley graph");
  twist->add_option("--orders", orders, "Cyclic orders")->required();
  twist->add_option("--gens", gens, "Generators")->required();
  twist->add_option("--bichar", bichar, "trivial, clifford, weyl or a JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "Built-in graphs and maps");
  catalog->add_option("preset", preset,
                      "m2-empty m2-edge m2-two m2-full m2-partial anticommutative-square gell-mann rook hypercube "
                      "folded squared cube halved random-su2 diagonal-embedding folded-embedding weyl-phi "
                      "hadamard-conjugation")
      ->required();
  catalog->add_option("--n", cat.n, "Size parameter");
  catalog->add_option("--m", cat.m, "Number of edge summands for m2-partial");
  catalog->add_option("--t", cat.t, "Angle for m2-partial");
  catalog->add_option("--dim", cat.dim, "Subspace dimension for random-su2");
  catalog->add_option("--gens", cat.gens, "Generators for cube");

  auto* quotient = app.add_subcommand("quotient", "Quotient graph through a unital embedding");
  quotient->add_option("graph", file, "quantum-graph document")->required();
  quotient->add_option("map", file2, "operator document for the embedding")->required();

  auto* subgraph = app.add_subcommand("subgraph", "Induced subgraph on kept blocks");
  subgraph->add_option("graph", file, "quantum-graph document")->required();
  subgraph->add_option("--keep", keep, "Block indices to keep, e.g. 0,2")->required();

  auto* obstruct = app.add_subcommand("obstruct", "Search for a Schur non-commutativity certificate");
  obstruct->add_option("graph", file, "quantum-graph document")->required();
  obstruct->add_option("--max-dim", max_dim, "Cap on the closure dimension (0 = N^2)");

  auto* iso = app.add_subcommand("iso-check", "Verify a given isomorphism of quantum graphs");
  iso->add_option("graph1", file, "source quantum-graph document")->required();
  iso->add_option("graph2", file2, "target quantum-graph document")->required();
  iso->add_option("map", file3, "operator document")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitInputError;
  }

  try {
    double tol = kDefaultTol;
    if (const char* env = std::getenv("QG_TOL"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      tol = std::strtod(env, &end);
      if (*end != '\0') throw InvalidInput(std::string("QG_TOL: '") + env + "' is not a number");
    }
    if (tol_opt->count() > 0) tol = tol_flag;
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be a positive number");

    Outcome res;
    if (set_check->parsed()) {
      SetPtr set;
      if (!file.empty()) {
        const Json doc = read_document(file, in);
        if (!doc.contains("set")) throw InvalidInput(file + ": document has no \"set\"");
        set = set_from_json(doc["set"], tol);
      } else if (!blocks.empty() || !orders.empty()) {
        set = set_from_flags(blocks, orders, bichar, tol, in);
      } else {
        throw InvalidInput("set-check: give a file, --blocks or --orders");
      }
      const Report r = verify_frobenius(*set);
      res.doc = report_document(r);
      res.doc["set"] = set_to_json(*set);
      res.code = r.passed() ? kExitOk : kExitCheckFailed;
    } else if (graph_check->parsed()) {
      const QuantumGraph g = graph_from_document(read_document(file, in), tol);
      const Report checks = graph_checks(g);
      res.doc = graph_report_document(*g.set, graph_report(g), checks,
                                      {{"weighted", g.weighted ? "true" : "false"}});
      res.code = checks.passed() ? kExitOk : kExitCheckFailed;
    } else if (rotate->parsed()) {
      const Json doc = read_document(file, in);
      if (doc.value("kind", "") == "edge-projection") {
        const EdgeProjection p = projection_from_document(doc, tol);
        res.doc = graph_document({p.set, projection_to_adjacency(p), false});
      } else {
        const QuantumGraph g = graph_from_document(doc, tol);
        res.doc = projection_document(adjacency_to_projection(g.set, g.adjacency));
      }
    } else if (cayley->parsed()) {
      const AbelianGroup g(parse_int_list(orders, "--orders"));
      const auto s = parse_elements(gens, g);
      const Metadata meta{{"orders", orders}, {"gens", gens}};
      if (spectrum) {
        res.doc = report_document(Report{}, meta);
        res.doc["spectrum"] = vector_to_json(cayley_spectrum(g, s));
      } else {
        res.doc = graph_document(classical_cayley(g, s, tol), meta);
      }
    } else if (twist->parsed()) {
      const AbelianGroup g(parse_int_list(orders, "--orders"));
      const auto s = parse_elements(gens, g);
      const Bicharacter b = resolve_bicharacter(bichar, g, tol, in);
      res.doc = graph_document(twisted_cayley(g, s, b, tol), {{"orders", orders}, {"gens", gens}, {"bichar", bichar}});
    } else if (catalog->parsed()) {
      res.doc = catalog_document(preset, cat, seed, tol);
    } else if (quotient->parsed()) {
      const QuantumGraph g = graph_from_document(read_document(file, in), tol);
      const Operator iota = operator_from_document(read_document(file2, in), tol);
      res.doc = graph_document(quotient_graph(g, {iota, BlockMapKind::subalgebra_embedding}));
    } else if (subgraph->parsed()) {
      const QuantumGraph g = graph_from_document(read_document(file, in), tol);
      res.doc = graph_document(induced_subgraph(g, parse_index_list(keep, "--keep")), {{"keep", keep}});
    } else if (obstruct->parsed()) {
      const QuantumGraph g = graph_from_document(read_document(file, in), tol);
      res.doc = certificate_document(*g.set, classical_obstruction(g, max_dim));
    } else if (iso->parsed()) {
      const QuantumGraph g1 = graph_from_document(read_document(file, in), tol);
      const QuantumGraph g2 = graph_from_document(read_document(file2, in), tol);
      const Operator phi = operator_from_document(read_document(file3, in), tol);
      const Report r = isomorphism_report(phi, g1, g2);
      res.doc = report_document(r);
      res.code = r.passed() ? kExitOk : kExitCheckFailed;
    }

    if (json) {
      out << dump_document(res.doc);
    } else {
      render_text(res.doc, out);
    }
    return res.code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace qgraph
