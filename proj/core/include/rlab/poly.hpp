#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/scalars.hpp"

namespace rlab {

// Dense univariate polynomial, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient vector; degree() then returns
// kZeroDegree as the "-infinity" sentinel.
template <ExactScalar S>
class Poly {
public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(S v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
  }
  static Poly monomial(S coef, int degree) {
    Poly p;
    if (!coef.is_zero()) {
      p.c_.assign(static_cast<size_t>(degree) + 1, S(0));
      p.c_.back() = std::move(coef);
    }
    return p;
  }
  static Poly x() { return monomial(S(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }

  // Coefficient of x^k; zero beyond the stored range.
  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<size_t>(k)];
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<S> r(std::max(p.c_.size(), q.c_.size()), S(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<S> r(std::max(p.c_.size(), q.c_.size()), S(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<S> r(c_.size(), S(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<S> r(p.c_.size() + q.c_.size() - 1, S(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const S& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<S> r = p.c_;
    for (auto& c : r) c = s * c;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  // Horner evaluation; a ring homomorphism for exact scalars.
  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(inner(x)), exact.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * inner + constant(*it);
    return acc;
  }

  // p(s*x): coefficient k picks up s^k.
  Poly scale_arg(const S& s) const {
    std::vector<S> r = c_;
    S sk(1);
    for (size_t k = 1; k < r.size(); ++k) {
      sk = sk * s;
      r[k] = r[k] * sk;
    }
    return Poly(std::move(r));
  }

  // x^m * p.
  Poly shift_up(int m) const {
    if (is_zero() || m == 0) return *this;
    std::vector<S> r(c_.size() + static_cast<size_t>(m), S(0));
    std::copy(c_.begin(), c_.end(), r.begin() + m);
    return Poly(std::move(r));
  }

  // k-th formal derivative.
  Poly derivative(int k = 1) const {
    Poly p = *this;
    for (; k > 0; --k) {
      if (p.c_.size() <= 1) return Poly();
      std::vector<S> r(p.c_.size() - 1, S(0));
      for (size_t i = 1; i < p.c_.size(); ++i) r[i - 1] = S(static_cast<long long>(i)) * p.c_[i];
      p = Poly(std::move(r));
    }
    return p;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<S> c_;
};

inline Poly<QuadScalar> promote(const Poly<Rational>& p) {
  std::vector<QuadScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.emplace_back(r);
  return Poly<QuadScalar>(std::move(c));
}

// Quotient/remainder over a field: p = q*d + r with deg r < deg d.
template <ExactScalar S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& p, const Poly<S>& d) {
  if (d.is_zero()) throw DivisionByZero();
  Poly<S> rem = p;
  std::vector<S> q(p.degree() >= d.degree() ? p.degree() - d.degree() + 1 : 0, S(0));
  S lead_inv = S(1) / d.coeff(d.degree());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    S factor = rem.coeff(rem.degree()) * lead_inv;
    q[static_cast<size_t>(k)] = factor;
    rem -= Poly<S>::monomial(factor, k) * d;
  }
  return {Poly<S>(std::move(q)), rem};
}

// Monic gcd over a field.
template <ExactScalar S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  S inv = S(1) / a.coeff(a.degree());
  return inv * a;
}

// Double-precision Horner; for diagnostics and fitting only, never verdicts.
inline double eval_double(const Poly<Rational>& p, double x) {
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).to_double();
  return acc;
}

}  // namespace rlab
