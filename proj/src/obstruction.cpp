#include "qgraph/obstruction.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <tuple>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, cplx>>;

// Orthonormal basis of the span, grown by two-pass Gram-Schmidt. Candidates
// are reduced in a dense scratch buffer; the basis itself stays sparse.
class SparseSpan {
 public:
  bool try_add(const Matrix& m) {
    const auto src = m.data();
    scratch_.assign(src.begin(), src.end());
    const double n0 = norm2(scratch_);
    if (n0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) {
        double cr = 0.0, ci = 0.0;
        for (const auto& [k, v] : b) {
          const cplx w = scratch_[k];
          cr += v.real() * w.real() + v.imag() * w.imag();
          ci += v.real() * w.imag() - v.imag() * w.real();
        }
        if (cr == 0.0 && ci == 0.0) continue;
        for (const auto& [k, v] : b)
          scratch_[k] -= cplx(cr * v.real() - ci * v.imag(), cr * v.imag() + ci * v.real());
      }
    }
    const double n1 = norm2(scratch_);
    if (n1 <= kSpanThreshold * n0) return false;
    SparseVec r;
    for (std::size_t k = 0; k < scratch_.size(); ++k)
      if (scratch_[k] != cplx{}) r.push_back({static_cast<std::uint32_t>(k), scratch_[k] / n1});
    basis_.push_back(std::move(r));
    return true;
  }

 private:
  std::vector<SparseVec> basis_;
  Vector scratch_;
};

}  // namespace

double schur_commutator(const QuantumSet& set, const Matrix& x, const Matrix& y) {
  return max_abs_diff(schur_product(set, x, y), schur_product(set, y, x));
}

SchurClosure close_span(const SetPtr& set, const std::vector<ClosureElement>& seeds, std::size_t max_dim) {
  const std::size_t n = set->N();
  const std::size_t full = n * n;
  if (max_dim == 0 || max_dim > full) max_dim = full;

  SchurClosure c{set, {}, 0, false};
  // A deque keeps references to earlier elements valid while new ones arrive.
  std::deque<ClosureElement> found;
  SparseSpan span;
  // ref bounds the size of the result; anything far below it is rounding noise.
  auto offer = [&](Matrix m, double ref, auto&& trace) {
    if (found.size() >= max_dim) return;
    if (norm2(m.data()) <= kNoiseFloor * ref) return;
    const double s = m.max_abs();
    m *= 1.0 / s;
    if (span.try_add(m)) found.push_back({std::move(m), trace()});
  };
  for (const auto& s : seeds) offer(s.op, 0.0, [&] { return s.trace; });

  auto binary = [](const char* op, const std::string& x, const std::string& y) {
    return std::string(op) + "(" + x + "," + y + ")";
  };
  std::size_t start = 0;
  bool capped = false;
  while (start < found.size() && found.size() < max_dim) {
    if (c.rounds == kClosureRounds) {
      capped = true;
      break;
    }
    ++c.rounds;
    const std::size_t end = found.size();
    for (std::size_t i = start; i < end && found.size() < max_dim; ++i) {
      const ClosureElement& x = found[i];
      const double nx = norm2(x.op.data());
      offer(x.op.adjoint(), nx, [&] { return "adjoint(" + x.trace + ")"; });
      offer(schur_star(*set, x.op), nx, [&] { return "schur_star(" + x.trace + ")"; });
      for (std::size_t j = 0; j < end && found.size() < max_dim; ++j) {
        if (j >= start && j > i) continue;
        const ClosureElement& y = found[j];
        const double nxy = nx * norm2(y.op.data());
        offer(x.op * y.op, nxy, [&] { return binary("compose", x.trace, y.trace); });
        offer(schur_product(*set, x.op, y.op), nxy, [&] { return binary("schur", x.trace, y.trace); });
        if (i != j) {
          offer(y.op * x.op, nxy, [&] { return binary("compose", y.trace, x.trace); });
          offer(schur_product(*set, y.op, x.op), nxy, [&] { return binary("schur", y.trace, x.trace); });
        }
      }
    }
    start = end;
  }
  c.partial = capped || (found.size() >= max_dim && max_dim < full && start < found.size());
  c.elements.assign(std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  return c;
}

SchurClosure schur_closure(const QuantumGraph& g, std::size_t max_dim) {
  const QuantumSet& set = *g.set;
  if (g.adjacency.rows() != set.N() || g.adjacency.cols() != set.N()) {
    throw InvalidInput("schur_closure: adjacency does not match the set dimension");
  }
  return close_span(g.set, {{g.adjacency, "A"}, {Matrix::identity(set.N()), "I"}, {schur_unit(set), "J"}}, max_dim);
}

ObstructionResult classical_obstruction(const QuantumGraph& g, std::size_t max_dim) {
  const SchurClosure c = schur_closure(g, max_dim);
  ObstructionResult out;
  out.closure_dim = c.dim();
  out.rounds = c.rounds;
  out.partial = c.partial;

  const QuantumSet& set = *g.set;
  double best = -1.0;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      const double r = schur_commutator(set, c.elements[i].op, c.elements[j].op);
      const double tie = 1e-12 * std::max(1.0, best);
      bool take = r > best + tie;
      if (!take && std::abs(r - best) <= tie) {
        const auto& ei = c.elements;
        take = std::tie(ei[i].trace, ei[j].trace) < std::tie(ei[bi].trace, ei[bj].trace);
      }
      if (take) {
        best = r;
        bi = i;
        bj = j;
      }
    }
  }
  out.max_residual = std::max(best, 0.0);
  if (best > kCertificateThreshold) {
    const auto& x = c.elements[bi];
    const auto& y = c.elements[bj];
    out.certificate = Certificate{{g.set, g.set, x.op}, {g.set, g.set, y.op}, x.trace, y.trace, best,
                                  kCertificateThreshold};
  }
  return out;
}

}  // namespace qgraph
