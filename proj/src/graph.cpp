#include "qgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

void require_square(const QuantumSet& set, const Matrix& a, const char* what) {
  if (a.rows() != set.N() || a.cols() != set.N()) {
    std::ostringstream os;
    os << what << ": operator is " << a.rows() << "x" << a.cols() << ", set has N = " << set.N();
    throw InvalidInput(os.str());
  }
}

void require_blocks(const QuantumSet& set, const char* what) {
  if (!set.has_blocks()) {
    throw InvalidInput(std::string(what) + ": needs a set given by matrix blocks");
  }
}

Vector flatten(const Matrix& m) { return {m.data().begin(), m.data().end()}; }

Matrix reshape(const Vector& v, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, v);
}

// Distance from x to span(onb); onb must be orthonormal.
double span_residual(const std::vector<Vector>& onb, Vector x) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : onb) {
      const cplx c = dot(b, x);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * b[k];
    }
  }
  return norm2(x);
}

// Rayleigh-Ritz on the Krylov space of L(Y) = A . Y started from J, with the
// Hilbert-Schmidt inner product. Returns the Ritz values.
std::vector<double> schur_krylov_spectrum(const QuantumSet& set, const Matrix& a) {
  const double scale = scale_of({&a});
  const Matrix j = schur_unit(set);
  std::vector<Matrix> basis;
  std::vector<Matrix> images;
  Matrix v = (1.0 / norm2(j.data())) * j;
  const std::size_t cap = set.N() * set.N();
  for (std::size_t k = 0; k < cap; ++k) {
    basis.push_back(v);
    images.push_back(schur_product(set, a, v));
    Matrix w = images.back();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= hs_inner(b, w) * b;
    }
    const double nw = norm2(w.data());
    if (nw <= 1e-9 * scale) break;
    v = (1.0 / nw) * w;
  }
  const std::size_t k = basis.size();
  Matrix h(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) h(r, c) = hs_inner(basis[r], images[c]);
  const Matrix hh = 0.5 * (h + h.adjoint());
  return hermitian_eigs(hh, 1e-6).values;
}

}  // namespace

const Matrix& EdgeProjection::at(std::size_t i, std::size_t j) const {
  const std::size_t a = set->blocks().size();
  return blocks.at(i * a + j);
}

Matrix& EdgeProjection::at(std::size_t i, std::size_t j) {
  const std::size_t a = set->blocks().size();
  return blocks.at(i * a + j);
}

std::string to_string(LoopStatus s) {
  switch (s) {
    case LoopStatus::none: return "none";
    case LoopStatus::all: return "all";
    case LoopStatus::partial: return "partial";
    case LoopStatus::mixed_weighted: return "mixed-weighted";
  }
  return "unknown";
}

Matrix schur_unit(const QuantumSet& set) {
  const Vector& eta = set.unit();
  Matrix j(set.N(), set.N());
  for (std::size_t p = 0; p < set.N(); ++p)
    for (std::size_t q = 0; q < set.N(); ++q) j(p, q) = eta[p] * std::conj(eta[q]);
  return j;
}

Matrix schur_product(const QuantumSet& set, const Matrix& a, const Matrix& b) {
  require_square(set, a, "schur_product");
  require_square(set, b, "schur_product");
  const std::size_t n = set.N();
  Matrix out(n, n);

  if (set.monomial() && a.is_diagonal() && b.is_diagonal()) {
    for (const auto& e : set.mult()) out(e.p, e.p) += std::norm(e.value) * a(e.r, e.r) * b(e.s, e.s);
    return out;
  }
  return schur_product_generic(set, a, b);
}

Matrix schur_product_generic(const QuantumSet& set, const Matrix& a, const Matrix& b) {
  require_square(set, a, "schur_product");
  require_square(set, b, "schur_product");
  const std::size_t n = set.N();
  Matrix out(n, n);
  const double work = static_cast<double>(set.mult().size()) * static_cast<double>(set.mult().size());
  if (work > kSchurWorkLimit) {
    std::ostringstream os;
    os << "schur_product: generic evaluation on N = " << n << " needs about " << work
       << " operations (limit " << kSchurWorkLimit << ")";
    throw ResourceLimit(os.str());
  }
  for (std::size_t p = 0; p < n; ++p) {
    const auto ep = set.products_into(p);
    for (std::size_t q = 0; q < n; ++q) {
      const auto eq = set.products_into(q);
      cplx acc = 0.0;
      for (const auto& e : ep) {
        for (const auto& f : eq) {
          const cplx ar = a(e.r, f.r);
          if (ar == cplx{}) continue;
          acc += e.value * ar * b(e.s, f.s) * std::conj(f.value);
        }
      }
      out(p, q) = acc;
    }
  }
  return out;
}

Matrix schur_star(const QuantumSet& set, const Matrix& a) {
  require_square(set, a, "schur_star");
  const std::size_t n = set.N();
  // A* = R conj(A) conj(R), using the sparsity of R.
  Matrix t(n, n);
  for (const auto& e : set.duality_entries())
    for (std::size_t c = 0; c < n; ++c) t(e.row, c) += e.value * std::conj(a(e.col, c));
  Matrix out(n, n);
  for (const auto& e : set.duality_entries())
    for (std::size_t r = 0; r < n; ++r) out(r, e.col) += t(r, e.row) * std::conj(e.value);
  return out;
}

Operator schur_product(const Operator& a, const Operator& b) {
  if (!same_set(a.domain, a.codomain) || !same_set(a.domain, b.domain) || !same_set(b.domain, b.codomain)) {
    throw InvalidInput("schur_product: operators must act on one common set");
  }
  return {a.domain, a.domain, schur_product(*a.domain, a.matrix, b.matrix)};
}

Operator schur_star(const Operator& a) {
  if (!same_set(a.domain, a.codomain)) throw InvalidInput("schur_star: operator must be square");
  return {a.domain, a.domain, schur_star(*a.domain, a.matrix)};
}

EdgeProjection adjacency_to_projection(const SetPtr& set, const Matrix& a) {
  require_blocks(*set, "adjacency_to_projection");
  require_square(*set, a, "adjacency_to_projection");
  const auto& bl = set->blocks();
  EdgeProjection p{set, {}};
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const auto ni = static_cast<std::size_t>(bl[i]);
      const auto nj = static_cast<std::size_t>(bl[j]);
      const double div = std::sqrt(static_cast<double>(ni * nj));
      Matrix m(ni * nj, ni * nj);
      for (std::size_t ai = 0; ai < ni; ++ai)
        for (std::size_t bi = 0; bi < ni; ++bi)
          for (std::size_t cj = 0; cj < nj; ++cj)
            for (std::size_t dj = 0; dj < nj; ++dj)
              m(ai * nj + cj, bi * nj + dj) = a(set->index(i, ai, bi), set->index(j, cj, dj)) / div;
      p.blocks.push_back(std::move(m));
    }
  }
  return p;
}

Matrix projection_to_adjacency(const EdgeProjection& p) {
  if (!p.set) throw InvalidInput("projection_to_adjacency: projection without set");
  require_blocks(*p.set, "projection_to_adjacency");
  const auto& bl = p.set->blocks();
  if (p.blocks.size() != bl.size() * bl.size()) {
    throw InvalidInput("projection_to_adjacency: expected one matrix per ordered block pair");
  }
  Matrix a(p.set->N(), p.set->N());
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const auto ni = static_cast<std::size_t>(bl[i]);
      const auto nj = static_cast<std::size_t>(bl[j]);
      const Matrix& m = p.at(i, j);
      if (m.rows() != ni * nj || m.cols() != ni * nj) {
        std::ostringstream os;
        os << "projection_to_adjacency: block pair (" << i << "," << j << ") must be "
           << ni * nj << "x" << ni * nj;
        throw InvalidInput(os.str());
      }
      const double mul = std::sqrt(static_cast<double>(ni * nj));
      for (std::size_t ai = 0; ai < ni; ++ai)
        for (std::size_t bi = 0; bi < ni; ++bi)
          for (std::size_t cj = 0; cj < nj; ++cj)
            for (std::size_t dj = 0; dj < nj; ++dj)
              a(p.set->index(i, ai, bi), p.set->index(j, cj, dj)) = m(ai * nj + cj, bi * nj + dj) * mul;
    }
  }
  return a;
}

EdgeProjection swap_legs(const EdgeProjection& p) {
  const auto& bl = p.set->blocks();
  EdgeProjection out{p.set, std::vector<Matrix>(p.blocks.size())};
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const auto ni = static_cast<std::size_t>(bl[i]);
      const auto nj = static_cast<std::size_t>(bl[j]);
      const Matrix& src = p.at(j, i);
      Matrix m(ni * nj, ni * nj);
      for (std::size_t a = 0; a < ni; ++a)
        for (std::size_t b = 0; b < ni; ++b)
          for (std::size_t c = 0; c < nj; ++c)
            for (std::size_t d = 0; d < nj; ++d)
              m(a * nj + c, b * nj + d) = src(d * ni + b, c * ni + a);
      out.at(i, j) = std::move(m);
    }
  }
  return out;
}

std::vector<double> edge_spectrum(const SetPtr& set, const Matrix& a) {
  require_square(*set, a, "edge_spectrum");
  if (!set->has_blocks()) return schur_krylov_spectrum(*set, a);
  const EdgeProjection p = adjacency_to_projection(set, a);
  std::vector<double> values;
  for (const auto& m : p.blocks) {
    const auto es = hermitian_eigs(m, std::max(set->tol(), 1e-9));
    values.insert(values.end(), es.values.begin(), es.values.end());
  }
  std::sort(values.begin(), values.end());
  return values;
}

bool edge_projection_positive(const SetPtr& set, const Matrix& a, double tol) {
  const double scale = scale_of({&a});
  if (max_abs_diff(schur_star(*set, a), a) > tol * scale) return false;
  const auto values = edge_spectrum(set, a);
  return values.empty() || values.front() >= -tol * scale;
}

GraphReport graph_report(const QuantumGraph& g) {
  const QuantumSet& set = *g.set;
  const Matrix& a = g.adjacency;
  require_square(set, a, "graph_report");
  const std::size_t n = set.N();
  const double tol = set.tol();

  const Matrix aa = schur_product(set, a, a);
  const Matrix astar = schur_star(set, a);
  const Matrix id = Matrix::identity(n);
  const Matrix ai = schur_product(set, a, id);
  const Matrix ia = schur_product(set, id, a);
  const double scale = scale_of({&a, &aa});
  const double thr = tol * scale;

  GraphReport r;
  const bool idempotent = max_abs_diff(aa, a) <= thr;
  const bool self_adjoint = max_abs_diff(astar, a) <= thr;
  r.is_graph = idempotent && self_adjoint;
  r.is_undirected = max_abs_diff(a, a.adjoint()) <= thr;

  const bool commuting_loops = max_abs_diff(ai, ia) <= thr;
  if (ai.max_abs() <= thr && commuting_loops) {
    r.loop_status = LoopStatus::none;
  } else if (max_abs_diff(ai, id) <= thr && commuting_loops) {
    r.loop_status = LoopStatus::all;
  } else if (!r.is_graph && commuting_loops) {
    r.loop_status = LoopStatus::mixed_weighted;
  } else {
    r.loop_status = LoopStatus::partial;
  }
  r.is_simple = r.is_graph && r.is_undirected && r.loop_status == LoopStatus::none;

  const Vector& eta = set.unit();
  r.vertices = std::llround(std::real(dot(eta, eta)));
  r.edges = dot(eta, a * eta);
  r.edges_imaginary = std::abs(std::imag(r.edges)) > thr * static_cast<double>(n);

  // Regularity: eta^dagger A = d eta^dagger.
  const cplx d = r.edges / static_cast<double>(r.vertices > 0 ? r.vertices : 1);
  const Vector row = a.adjoint() * eta;
  double dev = 0.0;
  for (std::size_t p = 0; p < n; ++p) dev = std::max(dev, std::abs(row[p] - std::conj(d) * eta[p]));
  if (dev <= thr * std::max(1.0, max_abs(eta)) && std::abs(std::imag(d)) <= thr) {
    r.regular_degree = std::real(d);
  }

  if (self_adjoint) {
    const auto spec = edge_spectrum(g.set, a);
    const double spec_tol = std::max(1e-8, 100.0 * tol) * scale;
    r.is_multigraph = std::all_of(spec.begin(), spec.end(), [&](double x) {
      return x >= -spec_tol && std::abs(x - std::round(x)) <= spec_tol;
    });
    if (set.has_blocks()) {
      r.quantum_edges = std::count_if(spec.begin(), spec.end(), [](double x) { return x > 0.5; });
    }
  }
  return r;
}

QuantumGraph quantum_edge(int n, const Matrix& xi, double tol) {
  if (n < 1) throw InvalidInput("quantum_edge: n must be positive");
  const auto un = static_cast<std::size_t>(n);
  if (xi.rows() != un || xi.cols() != un) throw InvalidInput("quantum_edge: xi must be n x n");
  const double norm = std::real(hs_inner(xi, xi));
  if (norm <= tol * tol) throw InvalidInput("quantum_edge: xi is zero");
  const auto set = build_quantum_set({n}, tol);
  const double c = static_cast<double>(n) / norm;
  Matrix a(un * un, un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t l = 0; l < un; ++l)
          a(i * un + j, k * un + l) = c * xi(i, k) * std::conj(xi(j, l));
  return {set, a, false};
}

QuantumGraph graph_from_subspace(int n, const std::vector<Matrix>& basis, double tol) {
  if (n < 1) throw InvalidInput("graph_from_subspace: n must be positive");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Vector> vecs;
  double scale = 1.0;
  for (const auto& m : basis) {
    if (m.rows() != un || m.cols() != un) throw InvalidInput("graph_from_subspace: matrices must be n x n");
    vecs.push_back(flatten(m));
    scale = std::max(scale, m.max_abs());
  }
  const auto kept = gram_schmidt(vecs, tol * scale);
  if (kept.size() != basis.size()) {
    std::ostringstream os;
    os << "graph_from_subspace: basis is linearly dependent (rank " << kept.size() << " of "
       << basis.size() << ")";
    throw InvalidInput(os.str());
  }
  QuantumGraph g{build_quantum_set({n}, tol), Matrix(un * un, un * un), false};
  for (const auto& v : vecs) g.adjacency += quantum_edge(n, reshape(v, un, un), tol).adjacency;
  return g;
}

std::vector<std::vector<Matrix>> subspace_from_graph(const QuantumGraph& g) {
  require_blocks(*g.set, "subspace_from_graph");
  const GraphReport rep = graph_report(g);
  if (!rep.is_graph) throw InvalidInput("subspace_from_graph: adjacency is not a quantum graph (see graph_report)");
  const EdgeProjection p = adjacency_to_projection(g.set, g.adjacency);
  const auto& bl = g.set->blocks();
  std::vector<std::vector<Matrix>> out;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const auto ni = static_cast<std::size_t>(bl[i]);
      const auto nj = static_cast<std::size_t>(bl[j]);
      const auto es = hermitian_eigs(p.at(i, j), std::max(g.set->tol(), 1e-9));
      const double s = std::pow(static_cast<double>(ni * nj), 0.25);
      std::vector<Matrix> pair;
      for (std::size_t k = 0; k < es.values.size(); ++k) {
        if (es.values[k] <= 0.5) continue;
        pair.push_back(s * reshape(es.vectors.column(k), ni, nj));
      }
      out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<Matrix> selfadjoint_basis(const std::vector<Matrix>& v, double tol) {
  if (v.empty()) return {};
  const std::size_t rows = v.front().rows();
  const std::size_t cols = v.front().cols();
  if (rows != cols) throw InvalidInput("selfadjoint_basis: matrices must be square");
  double scale = 1.0;
  std::vector<Vector> onb;
  for (const auto& m : v) {
    if (m.rows() != rows || m.cols() != cols) throw InvalidInput("selfadjoint_basis: shape mismatch");
    onb.push_back(flatten(m));
    scale = std::max(scale, m.max_abs());
  }
  gram_schmidt(onb, tol * scale);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (span_residual(onb, flatten(v[k].adjoint())) > tol * scale * 10.0) {
      std::ostringstream os;
      os << "selfadjoint_basis: the span is not closed under adjoint (element " << k << ")";
      throw InvalidInput(os.str());
    }
  }
  // Real and imaginary parts of every spanning element; keep an independent subset.
  std::vector<Matrix> candidates;
  for (const auto& m : v) {
    candidates.push_back(0.5 * (m + m.adjoint()));
    candidates.push_back(cplx(0.0, -0.5) * (m - m.adjoint()));
  }
  std::vector<Vector> work;
  for (const auto& c : candidates) work.push_back(flatten(c));
  const auto kept = gram_schmidt(work, tol * scale * 10.0);
  std::vector<Matrix> out;
  for (auto idx : kept) out.push_back(candidates[idx]);
  return out;
}

std::vector<Matrix> embed_operator_space(const QuantumSet& set,
                                         const std::vector<std::vector<Matrix>>& pairs) {
  require_blocks(set, "embed_operator_space");
  const auto& bl = set.blocks();
  if (pairs.size() != bl.size() * bl.size()) {
    throw InvalidInput("embed_operator_space: expected one list per ordered block pair");
  }
  std::vector<std::size_t> off{0};
  for (int b : bl) off.push_back(off.back() + static_cast<std::size_t>(b));
  const std::size_t k = off.back();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      for (const auto& m : pairs[i * bl.size() + j]) {
        if (m.rows() != static_cast<std::size_t>(bl[i]) || m.cols() != static_cast<std::size_t>(bl[j])) {
          throw InvalidInput("embed_operator_space: matrix shape does not match its block pair");
        }
        Matrix big(k, k);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) big(off[i] + r, off[j] + c) = m(r, c);
        out.push_back(std::move(big));
      }
    }
  }
  return out;
}

bool check_bimodule(const std::vector<Matrix>& v, const QuantumSet& set, double tol) {
  require_blocks(set, "check_bimodule");
  const auto& bl = set.blocks();
  std::vector<std::size_t> off{0};
  for (int b : bl) off.push_back(off.back() + static_cast<std::size_t>(b));
  const std::size_t k = off.back();
  double scale = 1.0;
  std::vector<Vector> onb;
  for (const auto& m : v) {
    if (m.rows() != k || m.cols() != k) throw InvalidInput("check_bimodule: operators must act on C^(sum n_i)");
    onb.push_back(flatten(m));
    scale = std::max(scale, m.max_abs());
  }
  gram_schmidt(onb, tol * scale);
  // The commutant of the block algebra is spanned by the block projections.
  std::vector<Matrix> projections;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    Matrix p(k, k);
    for (std::size_t r = off[i]; r < off[i + 1]; ++r) p(r, r) = 1.0;
    projections.push_back(std::move(p));
  }
  for (const auto& m : v) {
    for (const auto& p : projections) {
      if (span_residual(onb, flatten(p * m)) > tol * scale * 10.0) return false;
      if (span_residual(onb, flatten(m * p)) > tol * scale * 10.0) return false;
    }
  }
  return true;
}

}  // namespace qgraph
