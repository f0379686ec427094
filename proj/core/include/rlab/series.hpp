#pragma once

#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/poly.hpp"
#include "rlab/scalars.hpp"

namespace rlab {

// Truncated formal power series: coefficients 0..order are guaranteed correct.
// Every binary operation carries order = min of the operand orders; nothing is
// ever extended silently.
template <ExactScalar S>
class Series {
public:
  Series() : c_(1, S(0)) {}
  Series(std::vector<S> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(order) + 1, S(0));
  }
  static Series from_poly(const Poly<S>& p, int order) {
    std::vector<S> c(static_cast<size_t>(order) + 1, S(0));
    for (int k = 0; k <= std::min(order, p.degree()); ++k) c[static_cast<size_t>(k)] = p.coeff(k);
    return Series(std::move(c), order);
  }
  static Series constant(S v, int order) {
    return from_poly(Poly<S>::constant(std::move(v)), order);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  S coeff(int k) const {
    if (k < 0) return S(0);
    if (k > order()) throw OutOfOrder(k, order());
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<S>& coeffs() const { return c_; }

  Series truncate(int new_order) const {
    if (new_order > order()) throw OutOfOrder(new_order, order());
    return Series(std::vector<S>(c_.begin(), c_.begin() + new_order + 1), new_order);
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend Series operator+(const Series& s, const Series& t) {
    int n = std::min(s.order(), t.order());
    std::vector<S> r(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r[k] = s.c_[k] + t.c_[k];
    return Series(std::move(r), n);
  }
  friend Series operator-(const Series& s, const Series& t) {
    int n = std::min(s.order(), t.order());
    std::vector<S> r(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r[k] = s.c_[k] - t.c_[k];
    return Series(std::move(r), n);
  }
  friend Series operator*(const Series& s, const Series& t) {
    int n = std::min(s.order(), t.order());
    std::vector<S> r(static_cast<size_t>(n) + 1, S(0));
    for (int i = 0; i <= n; ++i) {
      if (s.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) r[i + j] += s.c_[i] * t.c_[j];
    }
    return Series(std::move(r), n);
  }
  friend Series operator*(const S& v, const Series& s) {
    std::vector<S> r = s.c_;
    for (auto& c : r) c = v * c;
    return Series(std::move(r), s.order());
  }

  friend bool operator==(const Series& s, const Series& t) { return s.c_ == t.c_; }

  // Multiplicative inverse through the truncation order; needs c0 != 0.
  Series inverse() const {
    if (c_[0].is_zero()) throw NotInvertible();
    int n = order();
    std::vector<S> r(static_cast<size_t>(n) + 1, S(0));
    S c0_inv = S(1) / c_[0];
    r[0] = c0_inv;
    for (int k = 1; k <= n; ++k) {
      S acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
      r[k] = -(c0_inv * acc);
    }
    return Series(std::move(r), n);
  }

  friend Series operator/(const Series& s, const Series& t) { return s * t.inverse(); }

  // Composition s(inner); requires valuation(inner) >= 1 so the truncation of
  // the result is determined by the truncations of the operands.
  Series compose(const Series& inner) const {
    if (!inner.c_[0].is_zero()) throw CompositionUndefined();
    int n = std::min(order(), inner.order());
    Series acc = Series::constant(S(0), n);
    Series in = inner.order() == n ? inner : inner.truncate(n);
    for (int k = order(); k >= 0; --k) acc = acc * in + Series::constant(c_[k], n);
    return acc;
  }

  // x * s, within the same order.
  Series shift_up() const {
    std::vector<S> r(c_.size(), S(0));
    for (size_t k = 1; k < c_.size(); ++k) r[k] = c_[k - 1];
    return Series(std::move(r), order());
  }

private:
  std::vector<S> c_;
};

inline Series<QuadScalar> promote(const Series<Rational>& s) {
  std::vector<QuadScalar> c;
  c.reserve(s.coeffs().size());
  for (const auto& r : s.coeffs()) c.emplace_back(r);
  return Series<QuadScalar>(std::move(c), s.order());
}

}  // namespace rlab
