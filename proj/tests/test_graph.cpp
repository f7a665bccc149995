#include <numbers>

#include "doctest.h"
#include "qgraph/catalog.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/random.hpp"
#include "test_support.hpp"

using namespace qgraph;
using namespace qgraph::testing;

namespace {

const Matrix kSquareA = real_rows({{1, 0, 0, 1}, {0, -1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, 1}});
const Matrix kSquareTilde = 0.5 * real_rows({{1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}});
const Matrix kITilde = 0.5 * real_rows({{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}});

// Oracle for M_n: multiplication as an N x N^2 matrix built from e_ab e_cd = delta_bc e_ad
// in the basis e_ab / sqrt(n).
Matrix dense_mult(std::size_t n) {
  const std::size_t nn = n * n;
  Matrix m(nn, nn * nn);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) m(a * n + d, (a * n + b) * nn + (b * n + d)) = s;
  return m;
}

Matrix oracle_schur(std::size_t n, const Matrix& a, const Matrix& b) {
  const Matrix m = dense_mult(n);
  return m * kron(a, b) * m.adjoint();
}

EdgeProjection single(const SetPtr& set, const Matrix& m) { return {set, {m}}; }

double hs_norm(const Matrix& m) { return norm2(m.data()); }

}  // namespace

TEST_CASE("projection_to_adjacency examples") {
  const auto m2 = build_quantum_set({2});
  CHECK(max_abs_diff(projection_to_adjacency(single(m2, kITilde)), Matrix::identity(4)) < 1e-12);
  CHECK(max_abs_diff(projection_to_adjacency(single(m2, kSquareTilde)), kSquareA) < 1e-12);
  CHECK(projection_to_adjacency(single(m2, Matrix(4, 4))).max_abs() == 0.0);
  CHECK_THROWS_AS(projection_to_adjacency(single(m2, Matrix(3, 3))), InvalidInput);
}

TEST_CASE("adjacency_to_projection examples") {
  const auto m2 = build_quantum_set({2});
  CHECK(max_abs_diff(adjacency_to_projection(m2, Matrix::identity(4)).at(0, 0), kITilde) < 1e-12);
  const Matrix p13 = pauli_edge(1).adjacency + pauli_edge(3).adjacency;
  CHECK(max_abs_diff(adjacency_to_projection(m2, p13).at(0, 0), kSquareTilde) < 1e-12);

  const auto x3 = build_quantum_set({1, 1, 1});
  const Matrix path = real_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const auto p = adjacency_to_projection(x3, path);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      REQUIRE(p.at(i, j).rows() == 1);
      CHECK(p.at(i, j)(0, 0) == path(i, j));
    }
}

TEST_CASE("rotation round trip on random operators") {
  Rng rng(17);
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{1, 2, 3},
                             std::vector<int>{1, 1, 1, 1}}) {
    const auto x = build_quantum_set(blocks);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(rng, x->N(), x->N());
      const Matrix back = projection_to_adjacency(adjacency_to_projection(x, a));
      CHECK(max_abs_diff(back, a) < 1e-12);
      EdgeProjection p = adjacency_to_projection(x, a);
      for (auto& m : p.blocks) m = random_matrix(rng, m.rows(), m.cols());
      const auto again = adjacency_to_projection(x, projection_to_adjacency(p));
      for (std::size_t k = 0; k < p.blocks.size(); ++k) CHECK(max_abs_diff(again.blocks[k], p.blocks[k]) < 1e-12);
    }
  }
}

TEST_CASE("schur_product examples") {
  Rng rng(3);
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{1, 2, 3}}) {
    const auto x = build_quantum_set(blocks);
    const Matrix id = Matrix::identity(x->N());
    CHECK(max_abs_diff(schur_product(*x, id, id), id) < 1e-12);
  }
  const auto m2 = build_quantum_set({2});
  const Matrix a = random_matrix(rng, 4, 4);
  CHECK(max_abs_diff(schur_product(*m2, a, schur_unit(*m2)), a) < 1e-12);
  CHECK(max_abs_diff(schur_product(*m2, schur_unit(*m2), a), a) < 1e-12);

  const Matrix p1 = pauli_edge(1).adjacency;
  const Matrix p3 = pauli_edge(3).adjacency;
  CHECK(schur_product(*m2, p1, p3).max_abs() < 1e-12);
  CHECK(oracle_schur(2, p1, p3).max_abs() < 1e-12);
}

TEST_CASE("schur_product agrees with the dense oracle on M_2 and M_3") {
  Rng rng(5);
  for (std::size_t n : {2u, 3u}) {
    const auto x = build_quantum_set({static_cast<int>(n)});
    for (int t = 0; t < 5; ++t) {
      const Matrix a = random_matrix(rng, n * n, n * n);
      const Matrix b = random_matrix(rng, n * n, n * n);
      CHECK(max_abs_diff(schur_product(*x, a, b), oracle_schur(n, a, b)) < 1e-10);
    }
  }
}

TEST_CASE("schur_product rejects mismatched operators") {
  const auto m2 = build_quantum_set({2});
  CHECK_THROWS_AS(schur_product(*m2, Matrix(3, 3), Matrix(4, 4)), InvalidInput);
  const auto x4 = build_quantum_set({1, 1, 1, 1});
  const Operator a{m2, m2, Matrix::identity(4)};
  const Operator b{x4, x4, Matrix::identity(4)};
  CHECK_THROWS_AS(schur_product(a, b), InvalidInput);
}

TEST_CASE("schur_star examples") {
  const auto m2 = build_quantum_set({2});
  CHECK(max_abs_diff(schur_star(*m2, Matrix::identity(4)), Matrix::identity(4)) < 1e-15);
  const auto x3 = build_quantum_set({1, 1, 1});
  const Matrix a = real_rows({{0, 2, 1}, {5, 0, 1}, {0, 3, 7}});
  CHECK(max_abs_diff(schur_star(*x3, a), a) < 1e-15);
  const Matrix p1 = pauli_edge(1).adjacency;
  CHECK(max_abs_diff(schur_star(*m2, kI * p1), -kI * p1) < 1e-15);
}

TEST_CASE("Schur algebra properties") {
  Rng rng(99);
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{1, 1, 1, 1},
                             std::vector<int>{1, 2}}) {
    const auto x = build_quantum_set(blocks);
    const std::size_t n = x->N();
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
      const Matrix a = random_matrix(rng, n, n);
      const Matrix b = random_matrix(rng, n, n);
      const Matrix c = random_matrix(rng, n, n);
      const Matrix ab = schur_product(*x, a, b);
      const double scale = std::max(1.0, ab.max_abs()) * 10.0;
      worst = std::max(worst, max_abs_diff(schur_product(*x, ab, c), schur_product(*x, a, schur_product(*x, b, c))) / scale);
      worst = std::max(worst, max_abs_diff(schur_star(*x, ab),
                                           schur_product(*x, schur_star(*x, b), schur_star(*x, a))) / scale);
      worst = std::max(worst, max_abs_diff(schur_star(*x, schur_star(*x, a)), a));
      // tau(X* . Y) = eta^dagger (X* . Y) eta equals Tr(X^dagger Y).
      const Matrix sy = schur_product(*x, schur_star(*x, a), b);
      const cplx tau = dot(x->unit(), sy * x->unit());
      worst = std::max(worst, std::abs(tau - hs_inner(a, b)) / scale);
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("rotation intertwines Schur product with block products") {
  Rng rng(4);
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 2}}) {
    const auto x = build_quantum_set(blocks);
    const Matrix a = random_matrix(rng, x->N(), x->N());
    const Matrix b = random_matrix(rng, x->N(), x->N());
    const auto pa = adjacency_to_projection(x, a);
    const auto pb = adjacency_to_projection(x, b);
    const auto pab = adjacency_to_projection(x, schur_product(*x, a, b));
    for (std::size_t k = 0; k < pa.blocks.size(); ++k) {
      CHECK(max_abs_diff(pab.blocks[k], pa.blocks[k] * pb.blocks[k]) < 1e-10);
    }
    // Schur star corresponds to the block adjoint.
    const auto ps = adjacency_to_projection(x, schur_star(*x, a));
    for (std::size_t k = 0; k < pa.blocks.size(); ++k) CHECK(max_abs_diff(ps.blocks[k], pa.blocks[k].adjoint()) < 1e-12);
  }
}

TEST_CASE("undirectedness is the leg-swap symmetry of the edge projection") {
  Rng rng(8);
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{1, 2}}) {
    const auto x = build_quantum_set(blocks);
    const Matrix h = random_hermitian(rng, x->N());
    // Make it Schur self-adjoint too so the projection is Hermitian.
    const Matrix a = 0.5 * (h + schur_star(*x, h));
    const bool undirected = max_abs_diff(a, a.adjoint()) < 1e-12;
    const auto p = adjacency_to_projection(x, a);
    const auto s = swap_legs(p);
    double d = 0.0;
    for (std::size_t k = 0; k < p.blocks.size(); ++k) d = std::max(d, max_abs_diff(p.blocks[k], s.blocks[k]));
    CHECK(undirected == (d < 1e-12));
  }
  const auto sq = anticommutative_square();
  const auto p = adjacency_to_projection(sq.set, sq.adjacency);
  CHECK(max_abs_diff(swap_legs(p).at(0, 0), p.at(0, 0)) < 1e-12);
  // A directed quantum edge breaks the symmetry.
  const auto directed = quantum_edge(2, pauli().sigma1 + kI * pauli().sigma2);
  const auto pd = adjacency_to_projection(directed.set, directed.adjacency);
  CHECK(max_abs_diff(swap_legs(pd).at(0, 0), pd.at(0, 0)) > 0.1);
  CHECK(max_abs_diff(directed.adjacency, directed.adjacency.adjoint()) > 0.1);
}

TEST_CASE("graph_report: anticommutative square") {
  const auto r = graph_report(anticommutative_square());
  CHECK(r.is_graph);
  CHECK(r.is_simple);
  CHECK(r.is_undirected);
  CHECK(r.loop_status == LoopStatus::none);
  CHECK(r.vertices == 4);
  CHECK(std::abs(r.edges - 8.0) < 1e-12);
  REQUIRE(r.quantum_edges.has_value());
  CHECK(*r.quantum_edges == 2);
  REQUIRE(r.regular_degree.has_value());
  CHECK(*r.regular_degree == doctest::Approx(2.0));
  CHECK(r.is_multigraph);
}

TEST_CASE("graph_report: full loopless graph on M_3") {
  const auto m3 = build_quantum_set({3});
  const Matrix a = schur_unit(*m3) - Matrix::identity(9);
  const auto r = graph_report({m3, a});
  CHECK(r.is_simple);
  CHECK(std::abs(r.edges - 72.0) < 1e-10);
  CHECK(*r.quantum_edges == 8);
  CHECK(*r.regular_degree == doctest::Approx(8.0));
}

TEST_CASE("graph_report: partial loop member") {
  const auto r = graph_report(m2_partial_family(1, std::numbers::pi / 4));
  CHECK(r.is_graph);
  CHECK(r.loop_status == LoopStatus::partial);
  CHECK_FALSE(r.is_simple);
}

TEST_CASE("graph_report: loops everywhere and the full graph") {
  for (const auto& blocks : {std::vector<int>{2}, std::vector<int>{1, 2}}) {
    const auto x = build_quantum_set(blocks);
    const double n = static_cast<double>(x->N());
    const auto ri = graph_report({x, Matrix::identity(x->N())});
    CHECK(ri.loop_status == LoopStatus::all);
    CHECK(std::abs(ri.edges - n) < 1e-10);
    const auto rj = graph_report({x, schur_unit(*x)});
    CHECK(rj.loop_status == LoopStatus::all);
    CHECK(std::abs(rj.edges - n * n) < 1e-10);
    const auto r0 = graph_report({x, Matrix(x->N(), x->N())});
    CHECK(r0.is_simple);
    CHECK(*r0.regular_degree == 0.0);
    CHECK(*r0.quantum_edges == 0);
  }
}

TEST_CASE("graph_report: weighted input with commuting loops") {
  const auto x = build_quantum_set({1, 1});
  const auto r = graph_report({x, real_rows({{2, 1}, {1, 2}}), true});
  CHECK_FALSE(r.is_graph);
  CHECK(r.loop_status == LoopStatus::mixed_weighted);
  CHECK(r.is_multigraph);
}

TEST_CASE("quantum_edge examples") {
  const Matrix p1 = quantum_edge(2, pauli().sigma1).adjacency;
  CHECK(max_abs_diff(p1, real_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})) < 1e-15);
  CHECK(max_abs_diff(quantum_edge(2, Matrix::identity(2)).adjacency, Matrix::identity(4)) < 1e-15);
  const auto gm = quantum_edge(3, pauli().lambda8);
  const auto r = graph_report(gm);
  CHECK(r.is_simple);
  CHECK(std::abs(r.edges - 9.0) < 1e-12);
  CHECK(*r.quantum_edges == 1);
  CHECK_THROWS_AS(quantum_edge(2, Matrix(2, 2)), InvalidInput);
}

TEST_CASE("quantum_edge: loops and symmetry follow xi") {
  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    Matrix xi = random_matrix(rng, 3, 3);
    xi -= (xi.trace() / 3.0) * Matrix::identity(3);
    const auto r = graph_report(quantum_edge(3, xi));
    CHECK(r.is_graph);
    CHECK(r.loop_status == LoopStatus::none);
    CHECK_FALSE(r.is_undirected);
    CHECK(std::abs(r.edges - 9.0) < 1e-10);
    const auto h = graph_report(quantum_edge(3, xi + xi.adjoint()));
    CHECK(h.is_undirected);
  }
}

TEST_CASE("graph_from_subspace examples") {
  const auto& p = pauli();
  CHECK(max_abs_diff(graph_from_subspace(2, {p.sigma1, p.sigma3}).adjacency, kSquareA) < 1e-12);
  const auto m2 = build_quantum_set({2});
  const Matrix full = schur_unit(*m2) - Matrix::identity(4);
  CHECK(max_abs_diff(graph_from_subspace(2, {p.sigma1, p.sigma2, p.sigma3}).adjacency, full) < 1e-12);
  CHECK(graph_from_subspace(2, {}).adjacency.max_abs() == 0.0);
  CHECK_THROWS_AS(graph_from_subspace(2, {p.sigma1, 2.0 * p.sigma1}), InvalidInput);
}

TEST_CASE("graph_from_subspace does not depend on the chosen basis") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    std::vector<Matrix> basis = {random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)};
    const Matrix mix = random_matrix(rng, 2, 2);
    std::vector<Matrix> other = {mix(0, 0) * basis[0] + mix(1, 0) * basis[1],
                                 mix(0, 1) * basis[0] + mix(1, 1) * basis[1]};
    CHECK(max_abs_diff(graph_from_subspace(3, basis).adjacency, graph_from_subspace(3, other).adjacency) < 1e-10);
  }
}

TEST_CASE("subspace_from_graph examples") {
  const auto& p = pauli();
  const auto v = subspace_from_graph(anticommutative_square());
  REQUIRE(v.size() == 1);
  REQUIRE(v[0].size() == 2);
  // Same span as {sigma1, sigma3}: rebuilding the graph gives the same adjacency.
  CHECK(max_abs_diff(graph_from_subspace(2, v[0]).adjacency, kSquareA) < 1e-10);
  for (const auto& m : v[0]) {
    CHECK(std::abs(hs_inner(m, m) - 2.0) < 1e-10);
    CHECK(std::abs(hs_inner(p.sigma2, m)) < 1e-10);
    CHECK(std::abs(m.trace()) < 1e-10);
  }

  for (int n : {2, 3}) {
    const auto x = build_quantum_set({n});
    const auto vi = subspace_from_graph({x, Matrix::identity(x->N())});
    REQUIRE(vi[0].size() == 1);
    const Matrix& xi = vi[0][0];
    CHECK(max_abs_diff(xi, xi(0, 0) * Matrix::identity(n)) < 1e-10);
  }

  const auto x3 = build_quantum_set({1, 1, 1});
  const Matrix path = real_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const auto vc = subspace_from_graph({x3, path});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(vc[i * 3 + j].size() == static_cast<std::size_t>(path(i, j).real()));

  CHECK_THROWS_AS(subspace_from_graph({x3, 2.0 * path}), InvalidInput);
}

TEST_CASE("simple graphs on M_n have realignment spectrum in {0, n}") {
  Rng rng(31);
  for (int n : {2, 3, 4}) {
    const auto un = static_cast<std::size_t>(n);
    for (int t = 0; t < 3; ++t) {
      std::vector<Matrix> basis;
      for (int k = 0; k < 2; ++k) {
        Matrix h = random_hermitian(rng, un);
        h -= (h.trace() / static_cast<double>(n)) * Matrix::identity(un);
        basis.push_back(h);
      }
      const auto g = graph_from_subspace(n, basis);
      CHECK(graph_report(g).is_simple);
      // Unnormalized realignment: n times the edge projection.
      const Matrix raw = static_cast<double>(n) * adjacency_to_projection(g.set, g.adjacency).at(0, 0);
      for (double ev : hermitian_eigs(raw).values) {
        CHECK((std::abs(ev) < 1e-8 || std::abs(ev - n) < 1e-8));
      }
      const auto v = subspace_from_graph(g);
      CHECK(v[0].size() == 2);
    }
  }
}

TEST_CASE("selfadjoint_basis examples") {
  const auto& p = pauli();
  const auto b = selfadjoint_basis({p.sigma1 + kI * p.sigma2, p.sigma1 - kI * p.sigma2});
  REQUIRE(b.size() == 2);
  for (const auto& m : b) CHECK(max_abs_diff(m, m.adjoint()) < 1e-15);
  CHECK(max_abs_diff(b[0], p.sigma1) < 1e-15);
  CHECK(max_abs_diff(b[1], p.sigma2) < 1e-15);

  const auto c = selfadjoint_basis({p.sigma3});
  REQUIRE(c.size() == 1);
  CHECK(max_abs_diff(c[0], p.sigma3) < 1e-15);

  const auto d = selfadjoint_basis({kI * p.sigma3});
  REQUIRE(d.size() == 1);
  CHECK(max_abs_diff(d[0], p.sigma3) < 1e-15);

  CHECK_THROWS_AS(selfadjoint_basis({p.sigma1 + kI * p.sigma2}), InvalidInput);
}

TEST_CASE("check_bimodule examples") {
  const auto x = build_quantum_set({1, 2});
  const auto sq = subspace_from_graph({x, Matrix::identity(x->N())});
  CHECK(check_bimodule(embed_operator_space(*x, sq), *x));

  const auto x2 = build_quantum_set({1, 1});
  CHECK_FALSE(check_bimodule({real_rows({{1, 1}, {1, 1}})}, *x2));

  const auto m3 = build_quantum_set({3});
  std::vector<Matrix> all;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      Matrix e(3, 3);
      e(a, b) = 1.0;
      all.push_back(e);
    }
  CHECK(check_bimodule(all, *m3));
}

TEST_CASE("edge_spectrum detects non-positive weighted projections") {
  const auto m2 = build_quantum_set({2});
  const Matrix a = projection_to_adjacency(single(m2, Matrix::identity(4) - 2.0 * kITilde));
  CHECK_FALSE(edge_projection_positive(m2, a, 1e-9));
  CHECK(edge_projection_positive(m2, kSquareA, 1e-9));
  CHECK(hs_norm(a) > 0.0);
}
