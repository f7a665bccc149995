#pragma once

// Sparse evaluation of string diagrams built from m, m^dagger, eta, eta^dagger,
// R and R^dagger. A vector in l2(X)^{(x)k} is a list of (key, value) terms whose
// key is the multi-index written in base N, leg 0 most significant.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "qgraph/quantum_set.hpp"

namespace qgraph::detail {

using Term = std::pair<std::uint64_t, cplx>;

class Terms {
 public:
  Terms(std::size_t n, int legs) : n_(n), legs_(legs) {}

  static Terms basis(std::size_t n, std::initializer_list<std::size_t> idx) {
    Terms t(n, static_cast<int>(idx.size()));
    std::uint64_t key = 0;
    for (auto i : idx) key = key * n + i;
    t.items_.push_back({key, 1.0});
    return t;
  }

  int legs() const { return legs_; }
  const std::vector<Term>& items() const { return items_; }

  /// Replaces legs [pos, pos + in) by `out` legs using map(subkey, emit).
  template <typename Map>
  Terms apply(int pos, int in, int out, Map&& map) const {
    Terms result(n_, legs_ - in + out);
    const std::uint64_t tail = pow(legs_ - pos - in);
    const std::uint64_t mid = pow(in);
    const std::uint64_t out_pow = pow(out);
    for (const auto& [key, value] : items_) {
      const std::uint64_t lo = key % tail;
      const std::uint64_t sub = (key / tail) % mid;
      const std::uint64_t hi = key / tail / mid;
      map(sub, [&](std::uint64_t sub_out, cplx coeff) {
        result.items_.push_back({(hi * out_pow + sub_out) * tail + lo, value * coeff});
      });
    }
    result.normalize();
    return result;
  }

  void normalize() {
    std::sort(items_.begin(), items_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < items_.size();) {
      std::uint64_t key = items_[i].first;
      cplx acc = 0.0;
      while (i < items_.size() && items_[i].first == key) acc += items_[i++].second;
      items_[w++] = {key, acc};
    }
    items_.resize(w);
  }

  friend double max_diff(const Terms& a, const Terms& b) {
    double m = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.items_.size() || j < b.items_.size()) {
      if (j == b.items_.size() ||
          (i < a.items_.size() && a.items_[i].first < b.items_[j].first)) {
        m = std::max(m, std::abs(a.items_[i++].second));
      } else if (i == a.items_.size() || b.items_[j].first < a.items_[i].first) {
        m = std::max(m, std::abs(b.items_[j++].second));
      } else {
        m = std::max(m, std::abs(a.items_[i++].second - b.items_[j++].second));
      }
    }
    return m;
  }

 private:
  std::uint64_t pow(int k) const {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= n_;
    return r;
  }

  std::size_t n_;
  int legs_;
  std::vector<Term> items_;
};

inline Terms apply_mult(const QuantumSet& x, const Terms& t, int pos) {
  const std::size_t n = x.N();
  return t.apply(pos, 2, 1, [&](std::uint64_t sub, auto emit) {
    for (const auto& e : x.products_of(sub / n, sub % n)) emit(e.p, e.value);
  });
}

inline Terms apply_comult(const QuantumSet& x, const Terms& t, int pos) {
  const std::size_t n = x.N();
  return t.apply(pos, 1, 2, [&](std::uint64_t sub, auto emit) {
    for (const auto& e : x.products_into(sub)) emit(e.r * n + e.s, std::conj(e.value));
  });
}

inline Terms insert_unit(const QuantumSet& x, const Terms& t, int pos) {
  return t.apply(pos, 0, 1, [&](std::uint64_t, auto emit) {
    for (std::size_t p = 0; p < x.N(); ++p)
      if (x.unit()[p] != cplx{}) emit(p, x.unit()[p]);
  });
}

inline Terms apply_counit(const QuantumSet& x, const Terms& t, int pos) {
  return t.apply(pos, 1, 0, [&](std::uint64_t sub, auto emit) {
    if (x.unit()[sub] != cplx{}) emit(0, std::conj(x.unit()[sub]));
  });
}

inline Terms insert_duality(const QuantumSet& x, const Terms& t, int pos) {
  const std::size_t n = x.N();
  return t.apply(pos, 0, 2, [&](std::uint64_t, auto emit) {
    for (const auto& e : x.duality_entries()) emit(e.row * n + e.col, e.value);
  });
}

inline Terms apply_coduality(const QuantumSet& x, const Terms& t, int pos) {
  const std::size_t n = x.N();
  return t.apply(pos, 2, 0, [&](std::uint64_t sub, auto emit) {
    const cplx v = x.duality()(sub / n, sub % n);
    if (v != cplx{}) emit(0, std::conj(v));
  });
}

}  // namespace qgraph::detail
