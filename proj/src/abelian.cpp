#include "qgraph/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

std::int64_t lcm_of_orders(const std::vector<int>& orders) {
  std::int64_t l = 1;
  for (int n : orders) l = std::lcm(l, static_cast<std::int64_t>(n));
  return l;
}

std::int64_t ipow(std::size_t base, std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= static_cast<std::int64_t>(base);
  return r;
}

// Digits of a multi-index key in base n, most significant first.
std::vector<std::size_t> digits(std::size_t key, std::size_t n, std::size_t legs) {
  std::vector<std::size_t> d(legs);
  for (std::size_t k = legs; k-- > 0;) {
    d[k] = key % n;
    key /= n;
  }
  return d;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidInput("AbelianGroup: need at least one cyclic factor");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1) {
      std::ostringstream os;
      os << "AbelianGroup: order " << i + 1 << " is " << orders_[i] << " (must be >= 1)";
      throw InvalidInput(os.str());
    }
    size_ *= static_cast<std::size_t>(orders_[i]);
    if (size_ > (1u << 20)) throw ResourceLimit("AbelianGroup: more than 2^20 elements");
  }
}

GroupElement AbelianGroup::element(std::size_t idx) const {
  if (idx >= size_) throw InvalidInput("AbelianGroup::element: index out of range");
  GroupElement g(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    g[k] = static_cast<int>(idx % static_cast<std::size_t>(orders_[k]));
    idx /= static_cast<std::size_t>(orders_[k]);
  }
  return g;
}

std::size_t AbelianGroup::index(const GroupElement& g) const {
  if (g.size() != orders_.size()) {
    std::ostringstream os;
    os << "AbelianGroup::index: element has " << g.size() << " components, group has " << orders_.size();
    throw InvalidInput(os.str());
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const int n = orders_[k];
    const int r = ((g[k] % n) + n) % n;
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(r);
  }
  return idx;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  GroupElement x = element(a);
  const GroupElement y = element(b);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  return index(x);
}

std::size_t AbelianGroup::negate(std::size_t a) const {
  GroupElement x = element(a);
  for (auto& c : x) c = -c;
  return index(x);
}

std::size_t AbelianGroup::generator(std::size_t i) const {
  if (i >= orders_.size()) throw InvalidInput("AbelianGroup::generator: index out of range");
  GroupElement g(orders_.size(), 0);
  g[i] = 1;
  return index(g);
}

int AbelianGroup::weight(std::size_t a) const {
  int w = 0;
  for (int c : element(a)) w += c != 0 ? 1 : 0;
  return w;
}

Matrix fourier_matrix(const AbelianGroup& g) {
  const std::size_t n = g.size();
  const std::int64_t l = lcm_of_orders(g.orders());
  std::vector<GroupElement> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back(g.element(i));
  Matrix f(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t m = 0; m < n; ++m) {
      std::int64_t e = 0;
      for (std::size_t k = 0; k < g.rank(); ++k) {
        e += static_cast<std::int64_t>(els[a][k]) * els[m][k] * (l / g.orders()[k]);
        e %= l;
      }
      f(a, m) = root_of_unity(e, l);
    }
  }
  return f;
}

Matrix inverse_fourier_matrix(const AbelianGroup& g) {
  return (1.0 / static_cast<double>(g.size())) * fourier_matrix(g).adjoint();
}

cplx Bicharacter::operator()(std::size_t mu, std::size_t nu) const {
  const GroupElement a = group_.element(mu);
  const GroupElement b = group_.element(nu);
  const std::size_t m = group_.rank();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      e += exponent_[i * m + j] * a[i] % modulus_ * b[j];
      e %= modulus_;
    }
  }
  return root_of_unity(e, modulus_);
}

bool Bicharacter::is_trivial() const {
  return std::all_of(exponent_.begin(), exponent_.end(), [](std::int64_t e) { return e == 0; });
}

Bicharacter make_bicharacter(const AbelianGroup& g, const Matrix& gen_values, double tol) {
  const std::size_t m = g.rank();
  if (gen_values.rows() != m || gen_values.cols() != m) {
    std::ostringstream os;
    os << "make_bicharacter: generator matrix must be " << m << "x" << m;
    throw InvalidInput(os.str());
  }
  Bicharacter b(g);
  std::vector<std::int64_t> k(m * m);
  std::vector<std::int64_t> gcds(m * m);
  std::int64_t l = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const cplx s = gen_values(i, j);
      std::ostringstream where;
      where << "(" << i + 1 << "," << j + 1 << ")";
      if (std::abs(std::abs(s) - 1.0) > tol) {
        throw InvalidInput("make_bicharacter: sigma" + where.str() + " is not unimodular");
      }
      const std::int64_t d = std::gcd(static_cast<std::int64_t>(g.orders()[i]),
                                      static_cast<std::int64_t>(g.orders()[j]));
      const double turns = std::arg(s) / (2.0 * std::acos(-1.0));
      std::int64_t kk = std::llround(turns * static_cast<double>(d));
      kk = ((kk % d) + d) % d;
      if (std::abs(s - root_of_unity(kk, d)) > tol) {
        std::ostringstream os;
        os << "make_bicharacter: sigma" << where.str() << " = " << s.real() << (s.imag() < 0 ? "" : "+")
           << s.imag() << "i violates the order conditions (its power " << g.orders()[i] << " or "
           << g.orders()[j] << " is not 1)";
        throw InvalidInput(os.str());
      }
      k[i * m + j] = kk;
      gcds[i * m + j] = d;
      l = std::lcm(l, d);
    }
  }
  b.modulus_ = l;
  b.exponent_.resize(m * m);
  b.gen_values_ = Matrix(m, m);
  for (std::size_t x = 0; x < m * m; ++x) {
    b.exponent_[x] = k[x] * (l / gcds[x]);
    b.gen_values_.data()[x] = root_of_unity(k[x], gcds[x]);
  }
  return b;
}

Bicharacter trivial_bicharacter(const AbelianGroup& g) {
  Matrix ones(g.rank(), g.rank());
  for (auto& z : ones.data()) z = 1.0;
  return make_bicharacter(g, ones);
}

Matrix cayley_adjacency(const AbelianGroup& g, const std::vector<std::size_t>& s) {
  const std::size_t n = g.size();
  Matrix a(n, n);
  for (std::size_t theta : s) {
    if (theta >= n) throw InvalidInput("cayley_adjacency: generator index out of range");
    for (std::size_t alpha = 0; alpha < n; ++alpha) a(g.add(alpha, theta), alpha) += 1.0;
  }
  return a;
}

QuantumGraph classical_cayley(const AbelianGroup& g, const std::vector<std::size_t>& s, double tol) {
  const auto set = build_quantum_set(std::vector<int>(g.size(), 1), tol);
  return {set, cayley_adjacency(g, s), false};
}

std::vector<cplx> cayley_spectrum(const AbelianGroup& g, const std::vector<std::size_t>& s) {
  const Matrix f = fourier_matrix(g);
  std::vector<cplx> lambda(g.size());
  for (std::size_t theta : s) {
    if (theta >= g.size()) throw InvalidInput("cayley_spectrum: generator index out of range");
    const std::size_t neg = g.negate(theta);
    for (std::size_t mu = 0; mu < g.size(); ++mu) lambda[mu] += f(neg, mu);
  }
  return lambda;
}

SetPtr twist_quantum_set(const Bicharacter& sigma, double tol) {
  const AbelianGroup& g = sigma.group();
  const std::size_t n = g.size();
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<MultEntry> mult;
  mult.reserve(n * n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) mult.push_back({g.add(mu, nu), mu, nu, std::conj(sigma(mu, nu)) * inv});
  Vector unit(n);
  unit[g.index(GroupElement(g.rank(), 0))] = std::sqrt(static_cast<double>(n));
  // tau_mu^* = c tau_{-mu} with c fixed by tau_mu^* tau_mu = 1.
  Matrix star(n, n);
  for (std::size_t mu = 0; mu < n; ++mu) star(mu, g.negate(mu)) = std::conj(sigma(mu, mu));
  return QuantumSet::from_tensors(n, std::move(mult), std::move(unit), std::move(star), tol, {},
                                  TwistOrigin{g.orders(), sigma.gen_values()});
}

QuantumGraph twisted_cayley(const AbelianGroup& g, const std::vector<std::size_t>& s,
                            const Bicharacter& sigma, double tol) {
  if (!(sigma.group() == g)) throw InvalidInput("twisted_cayley: bicharacter lives on a different group");
  const auto lambda = cayley_spectrum(g, s);
  return {twist_quantum_set(sigma, tol), Matrix::diagonal(lambda), false};
}

GradedTensor twist_tensor(const GradedTensor& t, const Bicharacter& sigma) {
  const std::size_t n = sigma.group().size();
  if (t.data.rows() != static_cast<std::size_t>(ipow(n, t.upper)) ||
      t.data.cols() != static_cast<std::size_t>(ipow(n, t.lower))) {
    throw InvalidInput("twist_tensor: data shape does not match the number of legs");
  }
  auto phase = [&](std::size_t key, std::size_t legs) {
    const auto d = digits(key, n, legs);
    cplx p = 1.0;
    for (std::size_t a = 0; a < legs; ++a)
      for (std::size_t b = a + 1; b < legs; ++b) p *= sigma(d[a], d[b]);
    return p;
  };
  std::vector<cplx> row_phase(t.data.rows());
  std::vector<cplx> col_phase(t.data.cols());
  for (std::size_t r = 0; r < row_phase.size(); ++r) row_phase[r] = phase(r, t.upper);
  for (std::size_t c = 0; c < col_phase.size(); ++c) col_phase[c] = std::conj(phase(c, t.lower));
  GradedTensor out = t;
  for (std::size_t r = 0; r < t.data.rows(); ++r)
    for (std::size_t c = 0; c < t.data.cols(); ++c) out.data(r, c) *= row_phase[r] * col_phase[c];
  return out;
}

GradedTensor compose(const GradedTensor& s, const GradedTensor& t) {
  if (s.lower != t.upper) throw InvalidInput("compose: leg counts do not match");
  return {s.upper, t.lower, s.data * t.data};
}

GradedTensor tensor(const GradedTensor& s, const GradedTensor& t) {
  return {s.upper + t.upper, s.lower + t.lower, kron(s.data, t.data)};
}

GradedTensor fourier_multiplication(const AbelianGroup& g) {
  const std::size_t n = g.size();
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix m(n, n * n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) m(g.add(mu, nu), mu * n + nu) = inv;
  return {1, 2, m};
}

GradedTensor fourier_unit(const AbelianGroup& g) {
  Matrix u(g.size(), 1);
  u(g.index(GroupElement(g.rank(), 0)), 0) = std::sqrt(static_cast<double>(g.size()));
  return {1, 0, u};
}

}  // namespace qgraph
