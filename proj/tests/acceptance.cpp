// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qgraph/abelian.hpp"
#include "qgraph/catalog.hpp"
#include "qgraph/clifford.hpp"
#include "qgraph/constructions.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/obstruction.hpp"
#include "qgraph/random.hpp"
#include "qgraph/weyl.hpp"
#include "test_support.hpp"

using namespace qgraph;
using namespace qgraph::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
  void note(const std::string& s) { detail << s << "; "; }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 means no budget
  std::function<void(Outcome&)> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

const Matrix kSquareA = real_rows({{1, 0, 0, 1}, {0, -1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, 1}});
const Matrix kSquareTilde = 0.5 * real_rows({{1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}});
const Matrix kITilde = 0.5 * real_rows({{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}});

// Every order tuple (non-decreasing, entries >= 2) with product at most `limit`.
std::vector<std::vector<int>> group_shapes(std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, std::size_t)> grow = [&](int lo, std::size_t prod) {
    if (!cur.empty()) out.push_back(cur);
    for (int k = lo; prod * static_cast<std::size_t>(k) <= limit; ++k) {
      cur.push_back(k);
      grow(k, prod * static_cast<std::size_t>(k));
      cur.pop_back();
    }
  };
  grow(2, 1);
  return out;
}

Bicharacter random_bicharacter(Rng& rng, const AbelianGroup& g) {
  const std::size_t m = g.rank();
  Matrix gen(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int d = std::gcd(g.orders()[i], g.orders()[j]);
      gen(i, j) = root_of_unity(static_cast<long long>(rng() % static_cast<std::uint64_t>(d)), d);
    }
  return make_bicharacter(g, gen);
}

// Bicharacters tried on each group: trivial, two random ones, and the named
// twists when the shape allows them.
std::vector<Bicharacter> bicharacters_for(Rng& rng, const std::vector<int>& orders) {
  const AbelianGroup g(orders);
  std::vector<Bicharacter> out = {trivial_bicharacter(g), random_bicharacter(rng, g), random_bicharacter(rng, g)};
  if (std::all_of(orders.begin(), orders.end(), [](int k) { return k == 2; }))
    out.push_back(clifford_bicharacter(static_cast<int>(orders.size())));
  if (orders.size() == 2 && orders[0] == orders[1]) out.push_back(weyl_bicharacter(orders[0]));
  return out;
}

std::vector<std::size_t> random_subset(Rng& rng, const AbelianGroup& g, bool symmetric) {
  std::vector<std::size_t> s;
  for (std::size_t mu = 0; mu < g.size(); ++mu) {
    if (symmetric && g.negate(mu) < mu) continue;
    if (rng() % 3 == 0) {
      s.push_back(mu);
      if (symmetric && g.negate(mu) != mu) s.push_back(g.negate(mu));
    }
  }
  return s;
}

// Dense multiplication as an N x N^2 matrix.
Matrix dense_multiplication(const QuantumSet& set) {
  const std::size_t n = set.N();
  Matrix m(n, n * n);
  for (const MultEntry& e : set.mult()) m(e.p, e.r * n + e.s) += e.value;
  return m;
}

Matrix column_matrix(const Vector& v) { return Matrix(v.size(), 1, v); }

cplx edge_total(const QuantumSet& set, const Matrix& a) { return dot(set.unit(), a * set.unit()); }

// ---------------------------------------------------------------------------

void frobenius_suite(Outcome& o) {
  std::vector<std::vector<int>> block_sets = {{2}, {3}, {4}, {1, 2, 3}, {2, 2, 4}};
  for (int k = 1; k <= 16; ++k) block_sets.push_back(std::vector<int>(static_cast<std::size_t>(k), 1));
  double worst_res = 0.0, worst_time = 0.0;
  int count = 0;
  auto check = [&](const SetPtr& set, const std::string& label) {
    const auto t0 = Clock::now();
    const Report r = verify_frobenius(*set);
    const double dt = seconds_since(t0);
    worst_time = std::max(worst_time, dt);
    worst_res = std::max(worst_res, r.max_residual());
    o.require(r.passed() && r.max_residual() <= 1e-9, label + " residual " + fmt(r.max_residual()));
    o.require(dt < 1.0, label + " took " + fmt(dt) + " s");
    ++count;
  };
  for (const auto& b : block_sets) check(build_quantum_set(b), "blocks of size " + std::to_string(b.size()));
  Rng rng(11);
  int twisted = 0;
  for (const auto& orders : group_shapes(64)) {
    for (const Bicharacter& sigma : bicharacters_for(rng, orders)) {
      std::string label = "twisted";
      for (int k : orders) label += " " + std::to_string(k);
      check(twist_quantum_set(sigma), label);
      ++twisted;
    }
  }
  o.note(std::to_string(count) + " sets (" + std::to_string(twisted) + " twisted)");
  o.note("max residual " + fmt(worst_res));
  o.note("slowest " + fmt(worst_time) + " s");
}

void anticommutative_square_example(Outcome& o) {
  const SetPtr m2 = build_quantum_set({2});
  const QuantumGraph g = anticommutative_square();
  const Matrix a_tilde = adjacency_to_projection(m2, g.adjacency).at(0, 0);
  const Matrix i_tilde = adjacency_to_projection(m2, Matrix::identity(4)).at(0, 0);
  const double d_a = max_abs_diff(g.adjacency, kSquareA);
  const double d_at = max_abs_diff(a_tilde, kSquareTilde);
  const double d_it = max_abs_diff(i_tilde, kITilde);
  const double d_back = max_abs_diff(projection_to_adjacency({m2, {kSquareTilde}}), kSquareA);
  const double prod = (a_tilde * i_tilde).max_abs();
  o.require(d_a <= 1e-12, "A differs by " + fmt(d_a));
  o.require(d_at <= 1e-12, "edge projection differs by " + fmt(d_at));
  o.require(d_it <= 1e-12, "identity projection differs by " + fmt(d_it));
  o.require(d_back <= 1e-12, "rotation back differs by " + fmt(d_back));
  o.require(prod <= 1e-12, "projection product " + fmt(prod));
  const GraphReport r = graph_report(g);
  o.require(r.is_simple && r.is_undirected, "not simple and undirected");
  o.require(r.vertices == 4, "vertices " + std::to_string(r.vertices));
  o.require(std::abs(r.edges - 8.0) <= 1e-12, "edges");
  o.require(r.quantum_edges && *r.quantum_edges == 2, "quantum edges");
  o.require(r.regular_degree && std::abs(*r.regular_degree - 2.0) <= 1e-12, "degree");
  o.note("max entry error " + fmt(std::max({d_a, d_at, d_it, d_back})));
  o.note("projection product " + fmt(prod));
}

void m2_classification(Outcome& o) {
  Rng rng(2718);
  int bad_class = 0;
  for (int t = 0; t < 500; ++t) {
    const int dim = t % 4;
    const QuantumGraph g = graph_from_subspace(2, random_su2_subspace(rng, dim));
    if (classify_m2(g) != dim) ++bad_class;
  }
  o.require(bad_class == 0, std::to_string(bad_class) + " of 500 misclassified");
  int bad_iso = 0;
  for (int t = 0; t < 200; ++t) {
    const int dim = t % 4;
    const std::vector<Matrix> v = random_su2_subspace(rng, dim);
    const Matrix u = random_special_unitary(rng, 2);
    std::vector<Matrix> w;
    for (const Matrix& x : v) w.push_back(u * x * u.adjoint());
    const QuantumGraph g1 = graph_from_subspace(2, v);
    const QuantumGraph g2 = graph_from_subspace(2, w);
    if (!check_isomorphism(conjugation_map(u), g1, g2) || classify_m2(g2) != dim) ++bad_iso;
  }
  o.require(bad_iso == 0, std::to_string(bad_iso) + " of 200 conjugations rejected");
  o.note("500 subspaces, 200 conjugations");
}

void rook_two_paths(Outcome& o) {
  double worst = 0.0, worst_spec = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const Matrix closed = rook_closed_form(n);
    const Matrix twisted = rook_via_twist(phi_isomorphism(n));
    worst = std::max(worst, max_abs_diff(closed, twisted));
    std::vector<double> want;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) want.push_back(n * (a == 0) + n * (b == 0) - 2.0);
    std::sort(want.begin(), want.end());
    for (const Matrix* m : {&closed, &twisted}) {
      const auto got = hermitian_eigs(*m).values;
      for (std::size_t k = 0; k < want.size(); ++k) worst_spec = std::max(worst_spec, std::abs(got[k] - want[k]));
    }
  }
  o.require(worst <= 1e-9, "paths differ by " + fmt(worst));
  o.require(worst_spec <= 1e-9, "spectrum off by " + fmt(worst_spec));
  o.require(rook_closed_form(2) == kSquareA, "n = 2 closed form is not the square");
  o.note("path difference " + fmt(worst));
  o.note("spectrum error " + fmt(worst_spec));
}

void weyl_isomorphism(Outcome& o) {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const WeylData w = phi_isomorphism(n);
    const Report hom = check_star_homomorphism(w.phi, true);
    o.require(hom.passed() && hom.max_residual() <= 1e-9, "n = " + std::to_string(n) + " homomorphism");
    const std::size_t nn = w.phi.matrix.rows();
    const double inv = std::max(max_abs_diff(w.phi.matrix * w.phi_inv.matrix, Matrix::identity(nn)),
                                max_abs_diff(w.phi_inv.matrix * w.phi.matrix, Matrix::identity(nn)));
    const double dual = max_abs_diff(transported_duality(w), duality_closed_form(n));
    const double mult = max_abs_diff(transported_multiplication(w), multiplication_closed_form(n));
    // The closed forms are also M_n's own tensors.
    const double own = std::max(max_abs_diff(duality_closed_form(n), w.matrix->duality()),
                                max_abs_diff(multiplication_closed_form(n), dense_multiplication(*w.matrix)));
    for (double r : {inv, dual, mult, own}) o.require(r <= 1e-9, "n = " + std::to_string(n) + " residual " + fmt(r));
    worst = std::max({worst, hom.max_residual(), inv, dual, mult, own});
  }
  o.note("max residual " + fmt(worst));
}

void clifford_relations(Outcome& o) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const CliffordSet cl = clifford_set(n);
    const QuantumSet& set = *cl.set;
    const double root = std::sqrt(static_cast<double>(set.N()));
    auto gen = [&](std::size_t i) {
      Vector x(set.N());
      x[cl.group.generator(i)] = root;
      return x;
    };
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      const Vector gi = gen(i);
      worst = std::max(worst, max_abs_diff(multiply_coeffs(set, gi, gi), set.unit()));
      worst = std::max(worst, max_abs_diff(star_coeffs(set, gi), gi));
      for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j) {
        const Vector gj = gen(j);
        Vector sum = multiply_coeffs(set, gi, gj);
        const Vector other = multiply_coeffs(set, gj, gi);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += other[k];
        worst = std::max(worst, max_abs(sum));
      }
    }
  }
  o.require(worst <= 1e-12, "relation residual " + fmt(worst));
  const QuantumSet& c2 = *clifford_set(2).set;
  const SetPtr w2 = twist_quantum_set(weyl_bicharacter(2));
  bool same = c2.mult().size() == w2->mult().size() && c2.unit() == w2->unit() && c2.star() == w2->star();
  for (std::size_t k = 0; same && k < c2.mult().size(); ++k) {
    const MultEntry& a = c2.mult()[k];
    const MultEntry& b = w2->mult()[k];
    same = a.p == b.p && a.r == b.r && a.s == b.s && a.value == b.value;
  }
  o.require(same, "two-generator Clifford constants differ from the Weyl twist");
  o.note("relation residual " + fmt(worst));
  o.note("two-generator constants identical to the Weyl twist: " + std::string(same ? "yes" : "no"));
}

void cube_spectra(Outcome& o) {
  double worst = 0.0;
  for (const CubePreset p : {CubePreset::hypercube, CubePreset::folded, CubePreset::squared}) {
    for (int n = 1; n <= 10; ++n) {
      const AbelianGroup g(std::vector<int>(static_cast<std::size_t>(n), 2));
      const std::vector<std::size_t> s = cube_generators(n, p);
      const QuantumGraph graph = cube_like_graph(n, p);
      for (std::size_t mu = 0; mu < g.size(); ++mu) {
        const GroupElement m = g.element(mu);
        double brute = 0.0;
        for (std::size_t theta : s) {
          const GroupElement t = g.element(theta);
          int parity = 0;
          for (std::size_t i = 0; i < m.size(); ++i) parity += m[i] * t[i];
          brute += parity % 2 == 0 ? 1.0 : -1.0;
        }
        const int d = g.weight(mu);
        double closed = 0.0;
        switch (p) {
          case CubePreset::hypercube: closed = n - 2.0 * d; break;
          case CubePreset::folded: closed = n + 1.0 - 4.0 * ((d + 1) / 2); break;
          case CubePreset::squared: closed = 0.5 * ((n + 1.0 - 2 * d) * (n + 1.0 - 2 * d) - n - 1.0); break;
        }
        worst = std::max({worst, std::abs(brute - closed), std::abs(cube_eigenvalue(n, p, d) - closed),
                          std::abs(graph.adjacency(mu, mu) - closed)});
      }
    }
  }
  o.require(worst <= 1e-9, "spectrum error " + fmt(worst));
  o.note("max error " + fmt(worst));
}

void twist_invariance(Outcome& o) {
  Rng rng(2024);
  const auto shapes = group_shapes(64);
  double worst_count = 0.0, worst_schur = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const AbelianGroup g(shapes[rng() % shapes.size()]);
    const Bicharacter sigma = random_bicharacter(rng, g);
    const std::vector<std::size_t> s = random_subset(rng, g, rng() % 2 == 0);
    const GraphReport c = graph_report(classical_cayley(g, s));
    const QuantumGraph tg = twisted_cayley(g, s, sigma);
    const GraphReport t = graph_report(tg);
    const std::string tag = "trial " + std::to_string(trial);
    o.require(c.is_graph == t.is_graph && c.is_undirected == t.is_undirected && c.loop_status == t.loop_status &&
                  c.is_simple == t.is_simple && c.is_multigraph == t.is_multigraph,
              tag + " flags differ");
    o.require(c.vertices == t.vertices, tag + " vertex counts differ");
    o.require(c.regular_degree.has_value() == t.regular_degree.has_value(), tag + " regularity differs");
    double diff = std::abs(c.edges - t.edges);
    if (c.regular_degree && t.regular_degree) diff = std::max(diff, std::abs(*c.regular_degree - *t.regular_degree));
    worst_count = std::max(worst_count, diff);
    const QuantumSet& set = *tg.set;
    worst_schur = std::max({worst_schur, max_abs_diff(schur_product(set, tg.adjacency, tg.adjacency), tg.adjacency),
                            max_abs_diff(schur_product_generic(set, tg.adjacency, tg.adjacency), tg.adjacency),
                            max_abs_diff(schur_star(set, tg.adjacency), tg.adjacency)});
  }
  o.require(worst_count <= 1e-8, "count difference " + fmt(worst_count));
  o.require(worst_schur <= 1e-9, "Schur residual " + fmt(worst_schur));
  o.note("count difference " + fmt(worst_count));
  o.note("Schur residual " + fmt(worst_schur));
}

void folded_embedding_suite(Outcome& o) {
  double worst_hom = 0.0, worst_quot = 0.0, worst_edges = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const Operator iota = folded_embedding(n);
    const Report hom = check_star_homomorphism(iota, true);
    o.require(hom.passed() && hom.max_residual() <= 1e-12, "n = " + std::to_string(n) + " homomorphism");
    worst_hom = std::max(worst_hom, hom.max_residual());
    const QuantumGraph cube = cube_like_graph(n + 1, CubePreset::hypercube);
    const QuantumGraph folded = cube_like_graph(n, CubePreset::folded);
    const Matrix quotient = iota.matrix.adjoint() * cube.adjacency * iota.matrix;
    worst_quot = std::max(worst_quot, max_abs_diff(quotient, 2.0 * folded.adjacency));
    const double edges = std::abs(edge_total(*iota.codomain, cube.adjacency) - edge_total(*iota.domain, quotient));
    worst_edges = std::max(worst_edges, edges);
    o.require(folded_embedding_report(n).passed(), "n = " + std::to_string(n) + " report");
  }
  o.require(worst_quot <= 1e-9, "quotient residual " + fmt(worst_quot));
  o.require(worst_edges <= 1e-9, "edge count residual " + fmt(worst_edges));
  o.note("homomorphism " + fmt(worst_hom));
  o.note("quotient " + fmt(worst_quot));
  o.note("edge count " + fmt(worst_edges));
}

void halved_cube(Outcome& o) {
  for (int n = 1; n + 1 <= 7; ++n) {
    const Report r = halved_square_check(n);
    o.require(r.passed(), "n = " + std::to_string(n) + " battery, residual " + fmt(r.max_residual()));
    const QuantumGraph b{clifford_set(n + 1).set, halved_adjacency(n), false};
    o.require(graph_report(b).is_simple, "n = " + std::to_string(n) + " not simple");
  }
  o.note("n + 1 = 2..7");
}

void quotient_examples(Outcome& o) {
  const BlockMap iota = diagonal_embedding(2);
  const SetPtr m2 = iota.map.codomain;
  const double r3 = std::sqrt(3.0);
  const std::vector<std::pair<Matrix, Matrix>> cases = {
      {0.5 * real_rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}), real_rows({{1, 1}, {1, 1}})},
      {0.25 * real_rows({{3, r3, r3, 1}, {r3, -3, 1, -r3}, {r3, 1, -3, -r3}, {1, -r3, -r3, 3}}),
       0.5 * real_rows({{3, 1}, {1, 3}})},
  };
  double worst = 0.0;
  for (const auto& [big, want] : cases) {
    const QuantumGraph y = quotient_graph(QuantumGraph{m2, big, false}, iota);
    const double d = max_abs_diff(y.adjacency, want);
    worst = std::max(worst, d);
    o.require(d <= 1e-12, "quotient differs by " + fmt(d));
    const cplx before = edge_total(*m2, big);
    const cplx after = edge_total(*y.set, y.adjacency);
    o.require(std::abs(before - 4.0) <= 1e-12 && std::abs(after - 4.0) <= 1e-12, "edge totals not 4");
  }
  o.note("max difference " + fmt(worst));
}

void obstruction(Outcome& o) {
  const QuantumGraph gm = gell_mann_graph();
  const ObstructionResult r = classical_obstruction(gm);
  o.require(r.certificate.has_value(), "Gell-Mann graph inconclusive");
  if (r.certificate) {
    o.require(r.certificate->residual > 1e-6, "Gell-Mann residual " + fmt(r.certificate->residual));
    o.note("Gell-Mann witness (" + r.certificate->x_trace + ", " + r.certificate->y_trace + ") residual " +
           fmt(r.certificate->residual));
  }
  const QuantumSet& m3 = *gm.set;
  const Matrix a2 = gm.adjacency * gm.adjacency;
  const double direct = schur_commutator(m3, gm.adjacency, a2);
  o.require(direct > 1e-6, "A and A^2 Schur-commute");
  o.note("direct pair (A, A^2) residual " + fmt(direct));

  const ObstructionResult p = classical_obstruction(m2_partial_family(1, std::numbers::pi / 4));
  o.require(p.certificate && p.certificate->x_trace == "A" && p.certificate->y_trace == "I",
            "partial family witness is not (A, I)");
  if (p.certificate) o.note("partial family witness (" + p.certificate->x_trace + ", " + p.certificate->y_trace + ")");

  o.require(!classical_obstruction(anticommutative_square()).certificate, "square obstructed");
  Rng rng(8128);
  int cayley = 0;
  for (const auto& orders : group_shapes(64)) {
    const AbelianGroup g(orders);
    for (const Bicharacter& sigma : bicharacters_for(rng, orders)) {
      const auto s = random_subset(rng, g, cayley % 2 == 0);
      const ObstructionResult c = classical_obstruction(twisted_cayley(g, s, sigma));
      std::string label = "twisted Cayley graph on";
      for (int x : orders) label += " " + std::to_string(x);
      o.require(!c.certificate && !c.partial, label + " not inconclusive");
      ++cayley;
    }
  }
  o.note(std::to_string(cayley) + " twisted Cayley graphs inconclusive");
}

// Dense oracles for the remaining identities on one set.
struct PropertyWorst {
  double value = 0.0;
  void take(double r) { value = std::max(value, r); }
};

void property_suites(Outcome& o) {
  Rng rng(31415);
  std::vector<std::pair<std::string, SetPtr>> sets = {{"M_2", build_quantum_set({2})},
                                                      {"M_3", build_quantum_set({3})},
                                                      {"X_4", build_quantum_set({1, 1, 1, 1})},
                                                      {"Cl_3", clifford_set(3).set}};
  for (const auto& [name, set] : sets) {
    const std::size_t n = set->N();
    const Matrix m = dense_multiplication(*set);
    const Matrix eta = column_matrix(set->unit());
    const Matrix id = Matrix::identity(n);
    const Matrix frob_left = kron(m, id) * kron(id, m.adjoint());
    const Matrix frob_right = kron(id, m) * kron(m.adjoint(), id);
    const Matrix special = m.adjoint() * m;
    const Matrix cup = m.adjoint() * eta;  // duality vector as N^2 x 1
    const Matrix cap = cup.adjoint();
    const Matrix snake_left = kron(cap, id) * kron(id, cup);
    const Matrix snake_right = kron(id, cap) * kron(cup, id);
    Matrix r(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) r(p, q) = cup(p * n + q, 0);
    const Matrix j = schur_unit(*set);

    PropertyWorst rot, assoc, unit, star, snake, frob;
    for (int t = 0; t < 100; ++t) {
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const Matrix c = random_matrix(rng, n, n);
      const Vector v = random_vector(rng, n);
      const Vector w = random_vector(rng, n * n);
      const double s1 = scale_of({&a});

      // Rotation to the edge tensor (A (x) id) R and back through R^dagger.
      const Matrix tilde = a * r;
      rot.take(max_abs_diff(tilde * r.conj(), a) / s1);
      if (set->has_blocks())
        rot.take(max_abs_diff(projection_to_adjacency(adjacency_to_projection(set, a)), a) / s1);

      const Matrix ab = schur_product(*set, a, b);
      const double s3 = std::max(1.0, ab.max_abs()) * 10.0;
      assoc.take(max_abs_diff(schur_product(*set, ab, c), schur_product(*set, a, schur_product(*set, b, c))) / s3);
      assoc.take(max_abs_diff(ab, m * kron(a, b) * m.adjoint()) / s3);
      unit.take(std::max(max_abs_diff(schur_product(*set, a, j), a), max_abs_diff(schur_product(*set, j, a), a)) / s1);
      star.take(max_abs_diff(schur_star(*set, ab), schur_product(*set, schur_star(*set, b), schur_star(*set, a))) / s3);

      const Matrix vm = column_matrix(v);
      snake.take(std::max(max_abs_diff(snake_left * vm, vm), max_abs_diff(snake_right * vm, vm)) / max_abs(v));
      const Matrix wm = column_matrix(w);
      const Matrix target = special * wm;
      frob.take(std::max(max_abs_diff(frob_left * wm, target), max_abs_diff(frob_right * wm, target)) /
                std::max(1.0, max_abs(w)));
    }
    const std::pair<const char*, double> rows[] = {{"rotation", rot.value},     {"associativity", assoc.value},
                                                   {"unit", unit.value},         {"star", star.value},
                                                   {"snake", snake.value},       {"frobenius", frob.value}};
    double worst = 0.0;
    for (const auto& [what, value] : rows) {
      o.require(value <= 1e-9, name + " " + what + " residual " + fmt(value));
      worst = std::max(worst, value);
    }
    o.note(name + " max " + fmt(worst));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "frobenius-suite", 0, frobenius_suite},
      {2, "anticommutative-square", 0, anticommutative_square_example},
      {3, "m2-classification", 30, m2_classification},
      {4, "rook-two-paths", 10, rook_two_paths},
      {5, "weyl-isomorphism", 0, weyl_isomorphism},
      {6, "clifford-relations", 0, clifford_relations},
      {7, "cube-spectra", 0, cube_spectra},
      {8, "twist-invariance", 60, twist_invariance},
      {9, "folded-embedding", 0, folded_embedding_suite},
      {10, "halved-cube", 0, halved_cube},
      {11, "quotient-examples", 0, quotient_examples},
      {12, "obstruction", 0, obstruction},
      {13, "property-suites", 0, property_suites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (c.budget_s > 0) o.require(dt < c.budget_s, "over budget of " + fmt(c.budget_s) + " s");
    if (!o.pass) ++failed;
    std::printf("%s %2d %-24s %8.2f s  %s", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), dt,
                o.detail.str().c_str());
    for (const auto& f : o.failures) std::printf("[%s] ", f.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
