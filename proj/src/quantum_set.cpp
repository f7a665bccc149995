#include "qgraph/quantum_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgraph/errors.hpp"
#include "tensor_terms.hpp"

namespace qgraph {

namespace {

bool input_less(const MultEntry& a, const MultEntry& b) {
  return a.r != b.r ? a.r < b.r : (a.s != b.s ? a.s < b.s : a.p < b.p);
}

bool output_less(const MultEntry& a, const MultEntry& b) {
  return a.p != b.p ? a.p < b.p : (a.r != b.r ? a.r < b.r : a.s < b.s);
}

void require_same(const SetPtr& a, const SetPtr& b, const char* what) {
  if (!same_set(a, b)) throw InvalidInput(std::string(what) + ": elements live on different sets");
}

}  // namespace

SetPtr QuantumSet::from_blocks(const std::vector<int>& blocks, double tol) {
  if (blocks.empty()) throw InvalidInput("build_quantum_set: block list is empty");
  if (!(tol > 0.0)) throw InvalidInput("build_quantum_set: tol must be positive");
  std::size_t n = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] <= 0) {
      std::ostringstream os;
      os << "build_quantum_set: block " << i << " has size " << blocks[i] << " (must be >= 1)";
      throw InvalidInput(os.str());
    }
    n += static_cast<std::size_t>(blocks[i]) * static_cast<std::size_t>(blocks[i]);
  }

  auto set = std::shared_ptr<QuantumSet>(new QuantumSet());
  set->n_ = n;
  set->tol_ = tol;
  set->blocks_ = blocks;
  set->offsets_.clear();
  std::size_t off = 0;
  for (int b : blocks) {
    set->offsets_.push_back(off);
    off += static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
  }

  set->unit_.assign(n, 0.0);
  set->star_ = Matrix(n, n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t bn = static_cast<std::size_t>(blocks[i]);
    const double inv = 1.0 / std::sqrt(static_cast<double>(bn));
    for (std::size_t a = 0; a < bn; ++a) {
      set->unit_[set->index(i, a, a)] = std::sqrt(static_cast<double>(bn));
      for (std::size_t b = 0; b < bn; ++b) {
        set->star_(set->index(i, a, b), set->index(i, b, a)) = 1.0;
        for (std::size_t d = 0; d < bn; ++d) {
          set->by_output_.push_back(
              {set->index(i, a, d), set->index(i, a, b), set->index(i, b, d), inv});
        }
      }
    }
  }
  set->finalize();
  return set;
}

SetPtr QuantumSet::from_tensors(std::size_t n, std::vector<MultEntry> mult, Vector unit,
                                Matrix star, double tol, std::vector<int> blocks,
                                std::optional<TwistOrigin> twist) {
  if (n == 0) throw InvalidInput("QuantumSet: dimension must be positive");
  if (!(tol > 0.0)) throw InvalidInput("QuantumSet: tol must be positive");
  if (unit.size() != n) throw InvalidInput("QuantumSet: unit vector has wrong length");
  if (star.rows() != n || star.cols() != n) throw InvalidInput("QuantumSet: star matrix has wrong shape");
  for (const auto& e : mult) {
    if (e.p >= n || e.r >= n || e.s >= n) throw InvalidInput("QuantumSet: structure constant index out of range");
  }
  auto set = std::shared_ptr<QuantumSet>(new QuantumSet());
  set->n_ = n;
  set->tol_ = tol;
  set->by_output_ = std::move(mult);
  set->unit_ = std::move(unit);
  set->star_ = std::move(star);
  set->twist_ = std::move(twist);
  if (!blocks.empty()) {
    std::size_t off = 0;
    for (int b : blocks) {
      if (b <= 0) throw InvalidInput("QuantumSet: block sizes must be positive");
      set->offsets_.push_back(off);
      off += static_cast<std::size_t>(b) * static_cast<std::size_t>(b);
    }
    if (off != n) throw InvalidInput("QuantumSet: block sizes do not match dimension");
    set->blocks_ = std::move(blocks);
  }
  set->finalize();
  return set;
}

void QuantumSet::finalize() {
  std::sort(by_output_.begin(), by_output_.end(), output_less);
  // Merge repeated (p, r, s) entries.
  std::size_t w = 0;
  for (std::size_t i = 0; i < by_output_.size(); ++i) {
    if (w > 0 && by_output_[w - 1].p == by_output_[i].p && by_output_[w - 1].r == by_output_[i].r &&
        by_output_[w - 1].s == by_output_[i].s) {
      by_output_[w - 1].value += by_output_[i].value;
    } else {
      by_output_[w++] = by_output_[i];
    }
  }
  by_output_.resize(w);

  output_start_.assign(n_ + 1, 0);
  for (const auto& e : by_output_) ++output_start_[e.p + 1];
  for (std::size_t p = 0; p < n_; ++p) output_start_[p + 1] += output_start_[p];

  by_input_ = by_output_;
  std::sort(by_input_.begin(), by_input_.end(), input_less);
  monomial_ = true;
  for (std::size_t i = 1; i < by_input_.size(); ++i) {
    if (by_input_[i].r == by_input_[i - 1].r && by_input_[i].s == by_input_[i - 1].s) {
      monomial_ = false;
      break;
    }
  }

  duality_ = Matrix(n_, n_);
  for (const auto& e : by_output_) duality_(e.r, e.s) += std::conj(e.value) * unit_[e.p];
  duality_nz_.clear();
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      if (duality_(p, q) != cplx{}) duality_nz_.push_back({p, q, duality_(p, q)});
}

bool QuantumSet::is_commutative_blocks() const {
  return has_blocks() && std::all_of(blocks_.begin(), blocks_.end(), [](int b) { return b == 1; });
}

std::span<const MultEntry> QuantumSet::products_into(std::size_t p) const {
  return std::span<const MultEntry>(by_output_).subspan(output_start_[p],
                                                        output_start_[p + 1] - output_start_[p]);
}

std::span<const MultEntry> QuantumSet::products_of(std::size_t r, std::size_t s) const {
  MultEntry key{0, r, s, {}};
  auto lo = std::lower_bound(by_input_.begin(), by_input_.end(), key, input_less);
  auto hi = lo;
  while (hi != by_input_.end() && hi->r == r && hi->s == s) ++hi;
  return {lo, hi};
}

std::size_t QuantumSet::index(std::size_t block, std::size_t row, std::size_t col) const {
  if (block >= blocks_.size()) throw InvalidInput("QuantumSet::index: block out of range");
  const auto n = static_cast<std::size_t>(blocks_[block]);
  if (row >= n || col >= n) throw InvalidInput("QuantumSet::index: entry out of range");
  return offsets_[block] + row * n + col;
}

BasisLabel QuantumSet::label(std::size_t p) const {
  if (!has_blocks()) return {0, p, 0};
  if (p >= n_) throw InvalidInput("QuantumSet::label: index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), p);
  const auto block = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const auto n = static_cast<std::size_t>(blocks_[block]);
  const std::size_t local = p - offsets_[block];
  return {block, local / n, local % n};
}

std::size_t QuantumSet::block_offset(std::size_t block) const {
  if (block >= offsets_.size()) throw InvalidInput("QuantumSet::block_offset: block out of range");
  return offsets_[block];
}

bool QuantumSet::same_as(const QuantumSet& other) const {
  if (this == &other) return true;
  if (n_ != other.n_ || blocks_ != other.blocks_) return false;
  if (twist_.has_value() != other.twist_.has_value()) return false;
  if (twist_) {
    return twist_->orders == other.twist_->orders &&
           max_abs_diff(twist_->gen_values, other.twist_->gen_values) <= 1e-12;
  }
  if (has_blocks()) return true;
  if (by_output_.size() != other.by_output_.size()) return false;
  for (std::size_t i = 0; i < by_output_.size(); ++i) {
    const auto& a = by_output_[i];
    const auto& b = other.by_output_[i];
    if (a.p != b.p || a.r != b.r || a.s != b.s || a.value != b.value) return false;
  }
  return unit_ == other.unit_ && star_ == other.star_;
}

bool same_set(const SetPtr& a, const SetPtr& b) {
  if (!a || !b) return false;
  return a == b || a->same_as(*b);
}

SetPtr build_quantum_set(const std::vector<int>& blocks, double tol) {
  return QuantumSet::from_blocks(blocks, tol);
}

AlgebraElement unit_element(const SetPtr& set) { return {set, set->unit()}; }

AlgebraElement basis_element(const SetPtr& set, std::size_t p) {
  if (p >= set->N()) throw InvalidInput("basis_element: index out of range");
  Vector v(set->N());
  v[p] = 1.0;
  return {set, std::move(v)};
}

AlgebraElement element_from_blocks(const SetPtr& set, const std::vector<Matrix>& blocks) {
  if (!set->has_blocks() || blocks.size() != set->blocks().size()) {
    throw InvalidInput("element_from_blocks: need one matrix per block");
  }
  Vector v(set->N());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto n = static_cast<std::size_t>(set->blocks()[i]);
    if (blocks[i].rows() != n || blocks[i].cols() != n) {
      throw InvalidInput("element_from_blocks: block has wrong shape");
    }
    const double s = std::sqrt(static_cast<double>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) v[set->index(i, a, b)] = s * blocks[i](a, b);
  }
  return {set, std::move(v)};
}

std::vector<Matrix> element_to_blocks(const AlgebraElement& x) {
  const auto& set = *x.set;
  if (!set.has_blocks()) throw InvalidInput("element_to_blocks: set has no block structure");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < set.blocks().size(); ++i) {
    const auto n = static_cast<std::size_t>(set.blocks()[i]);
    const double s = std::sqrt(static_cast<double>(n));
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = x.coeffs[set.index(i, a, b)] / s;
    out.push_back(std::move(m));
  }
  return out;
}

Vector multiply_coeffs(const QuantumSet& set, std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != set.N() || y.size() != set.N()) throw InvalidInput("algebra_multiply: wrong length");
  Vector out(set.N());
  for (const auto& e : set.mult()) out[e.p] += e.value * x[e.r] * y[e.s];
  return out;
}

Vector star_coeffs(const QuantumSet& set, std::span<const cplx> x) {
  if (x.size() != set.N()) throw InvalidInput("algebra_star: wrong length");
  const Matrix& f = set.star();
  Vector out(set.N());
  for (std::size_t p = 0; p < set.N(); ++p) {
    if (x[p] == cplx{}) continue;
    const cplx c = std::conj(x[p]);
    for (std::size_t q = 0; q < set.N(); ++q) out[q] += f(p, q) * c;
  }
  return out;
}

AlgebraElement algebra_multiply(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x.set, y.set, "algebra_multiply");
  return {x.set, multiply_coeffs(*x.set, x.coeffs, y.coeffs)};
}

AlgebraElement algebra_star(const AlgebraElement& x) { return {x.set, star_coeffs(*x.set, x.coeffs)}; }

cplx counit_apply(const AlgebraElement& x) { return dot(x.set->unit(), x.coeffs); }

Matrix left_regular(const QuantumSet& set, std::span<const cplx> x) {
  if (x.size() != set.N()) throw InvalidInput("left_regular: wrong length");
  Matrix out(set.N(), set.N());
  for (const auto& e : set.mult()) out(e.p, e.s) += e.value * x[e.r];
  return out;
}

Report verify_frobenius(const QuantumSet& set) {
  using detail::Terms;
  const std::size_t n = set.N();
  double scale = std::max(1.0, max_abs(set.unit()));
  for (const auto& e : set.mult()) scale = std::max(scale, std::abs(e.value));
  const double thr = set.tol() * scale;
  Report rep;

  double special = 0.0;
  double snake = 0.0;
  double dual_mult = 0.0;
  double unit_law = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const Terms ea = Terms::basis(n, {a});
    special = std::max(special, max_diff(detail::apply_mult(set, detail::apply_comult(set, ea, 0), 0), ea));

    const Terms s1 = detail::apply_coduality(set, detail::insert_duality(set, ea, 1), 0);
    const Terms s2 = detail::apply_coduality(set, detail::insert_duality(set, ea, 0), 1);
    snake = std::max({snake, max_diff(s1, ea), max_diff(s2, ea)});

    const Terms comult = detail::apply_comult(set, ea, 0);
    const Terms d1 = detail::apply_mult(set, detail::insert_duality(set, ea, 0), 1);
    const Terms d2 = detail::apply_mult(set, detail::insert_duality(set, ea, 1), 0);
    dual_mult = std::max({dual_mult, max_diff(d1, comult), max_diff(d2, comult)});

    const Terms u1 = detail::apply_mult(set, detail::insert_unit(set, ea, 0), 0);
    const Terms u2 = detail::apply_mult(set, detail::insert_unit(set, ea, 1), 0);
    unit_law = std::max({unit_law, max_diff(u1, ea), max_diff(u2, ea)});
  }

  double frob = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Terms eab = Terms::basis(n, {a, b});
      const Terms prod = detail::apply_mult(set, eab, 0);
      const Terms mid = detail::apply_comult(set, prod, 0);
      const Terms left = detail::apply_mult(set, detail::apply_comult(set, eab, 1), 0);
      const Terms right = detail::apply_mult(set, detail::apply_comult(set, eab, 0), 1);
      frob = std::max({frob, max_diff(left, mid), max_diff(right, mid)});

      const Terms c1 = detail::apply_coduality(set, detail::apply_comult(set, eab, 1), 0);
      const Terms c2 = detail::apply_coduality(set, detail::apply_comult(set, eab, 0), 1);
      dual_mult = std::max({dual_mult, max_diff(c1, prod), max_diff(c2, prod)});
    }
  }

  // Associativity on every basis triple up to N = 64; beyond that the middle
  // factor is sampled on a fixed stride.
  double assoc = 0.0;
  const std::size_t stride = n <= 64 ? 1 : (n + 63) / 64;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; b += stride) {
      for (std::size_t c = 0; c < n; ++c) {
        const Terms t = Terms::basis(n, {a, b, c});
        const Terms l = detail::apply_mult(set, detail::apply_mult(set, t, 0), 0);
        const Terms r = detail::apply_mult(set, detail::apply_mult(set, t, 1), 0);
        assoc = std::max(assoc, max_diff(l, r));
      }
    }
  }

  const Matrix& dual = set.duality();
  const double symmetric = max_abs_diff(dual, dual.transpose());
  const Matrix& f = set.star();
  const double involution =
      std::max(max_abs_diff(f * f.conj(), Matrix::identity(n)), max_abs_diff(dual, f));
  const double count = std::abs(dot(set.unit(), set.unit()) - static_cast<double>(n));

  rep.add("special", special, thr, "m m^dagger = id");
  rep.add("frobenius-law", frob, thr);
  rep.add("snake", snake, thr);
  rep.add("duality-multiplication", dual_mult, thr);
  rep.add("unit-law", unit_law, thr);
  rep.add("duality-symmetric", symmetric, thr);
  rep.add("star-involution", involution, thr, "F conj(F) = id and R = F");
  rep.add("associativity", assoc, thr, stride == 1 ? "all triples" : "sampled triples");
  rep.add("vertex-count", count, thr, "eta^dagger eta = N");
  return rep;
}

Report check_star_homomorphism(const Operator& f, bool unital) {
  if (!f.domain || !f.codomain) throw InvalidInput("check_star_homomorphism: operator without sets");
  const QuantumSet& x = *f.domain;
  const QuantumSet& y = *f.codomain;
  if (f.matrix.rows() != y.N() || f.matrix.cols() != x.N()) {
    throw InvalidInput("check_star_homomorphism: matrix shape does not match the sets");
  }
  const double thr = std::min(x.tol(), y.tol()) * scale_of({&f.matrix});
  std::vector<Vector> images;
  images.reserve(x.N());
  for (std::size_t a = 0; a < x.N(); ++a) images.push_back(f.matrix.column(a));

  double mult = 0.0;
  for (std::size_t a = 0; a < x.N(); ++a) {
    for (std::size_t b = 0; b < x.N(); ++b) {
      Vector lhs(y.N());
      for (const auto& e : x.products_of(a, b)) {
        for (std::size_t k = 0; k < y.N(); ++k) lhs[k] += e.value * images[e.p][k];
      }
      const Vector rhs = multiply_coeffs(y, images[a], images[b]);
      mult = std::max(mult, max_abs_diff(lhs, rhs));
    }
  }

  double star = 0.0;
  for (std::size_t a = 0; a < x.N(); ++a) {
    Vector ea(x.N());
    ea[a] = 1.0;
    const Vector lhs = f.matrix * star_coeffs(x, ea);
    const Vector rhs = star_coeffs(y, images[a]);
    star = std::max(star, max_abs_diff(lhs, rhs));
  }

  Report rep;
  rep.add("multiplicative", mult, thr);
  if (unital) rep.add("unital", max_abs_diff(f.matrix * x.unit(), y.unit()), thr);
  rep.add("star-preserving", star, thr);
  return rep;
}

bool is_positive_element(const Matrix& rep, double tol) {
  if (!rep.is_square()) throw InvalidInput("is_positive_element: matrix is not square");
  if (rep.rows() == 0) return true;
  const double scale = scale_of({&rep});
  if (max_abs_diff(rep, rep.adjoint()) > tol * scale) return false;
  const EigenSystem es = hermitian_eigs(rep, tol);
  return es.values.front() >= -tol * scale;
}

Operator adjoint(const Operator& f) { return {f.codomain, f.domain, f.matrix.adjoint()}; }

Operator compose(const Operator& g, const Operator& f) {
  if (!same_set(g.domain, f.codomain)) throw InvalidInput("compose: maps are not composable");
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

Operator identity_operator(const SetPtr& set) { return {set, set, Matrix::identity(set->N())}; }

}  // namespace qgraph
