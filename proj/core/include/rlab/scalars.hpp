#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>

#include "rlab/errors.hpp"

namespace rlab {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: den > 0, gcd(|num|, den) = 1.
// Every constructor and operation normalizes; arithmetic is exact.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return raw(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (num_ == 0) throw DivisionByZero();
    return raw(num_ > 0 ? den_ : -den_, boost::multiprecision::abs(num_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form makes this valid
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Exact: every finite double is a dyadic rational.
  static Rational from_double(double d) {
    if (!std::isfinite(d)) throw Error("cannot convert non-finite double to Rational");
    if (d == 0.0) return Rational();
    int exp = 0;
    double m = std::frexp(d, &exp);                        // d = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53)); // integer, |mant| <= 2^53
    int shift = exp - 53;
    BigInt n(mant), den(1);
    if (shift >= 0) {
      n <<= shift;
    } else {
      den <<= -shift;
    }
    return Rational(std::move(n), std::move(den));
  }

  // Rounded conversion; scales first so huge numerators/denominators stay finite.
  double to_double() const {
    if (num_ == 0) return 0.0;
    BigInt n = num_, d = den_;
    unsigned nb = boost::multiprecision::msb(boost::multiprecision::abs(n));
    unsigned db = boost::multiprecision::msb(d);
    if (nb > 512 && db > 512) {
      unsigned s = std::min(nb, db) - 512;
      n >>= s;
      d >>= s;
    }
    return n.convert_to<double>() / d.convert_to<double>();
  }

  static Rational pow(const Rational& base, int k) {
    if (k < 0) return pow(base.inverse(), -k);
    Rational acc(1), b = base;
    for (int e = k; e > 0; e >>= 1) {
      if (e & 1) acc *= b;
      if (e > 1) b *= b;
    }
    return acc;
  }

  static constexpr bool is_exact = true;

private:
  static Rational raw(BigInt n, BigInt d) {
    Rational r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  void normalize() {
    if (den_ == 0) throw DivisionByZero();
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

// Element a + b*sqrt(2) of the quadratic extension field Q(sqrt(2)).
// Componentwise equality is exact equality: sqrt(2) is irrational, so
// a + b*sqrt(2) = 0 iff a = b = 0, and a^2 - 2 b^2 = 0 only at zero.
class QuadScalar {
public:
  QuadScalar() = default;
  QuadScalar(long long n) : a_(n) {}  // NOLINT: implicit by design
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT: Rational embeds as b = 0
  QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadScalar sqrt2() { return QuadScalar(Rational(0), Rational(1)); }
  // (sqrt 2)^k for any integer k, exact.
  static QuadScalar sqrt2_pow(int k) {
    bool neg = k < 0;
    int m = neg ? -k : k;
    Rational two_pow = Rational::pow(Rational(2), m / 2);
    QuadScalar v = (m % 2 == 0) ? QuadScalar(two_pow)
                                : QuadScalar(Rational(0), two_pow);
    return neg ? v.inverse() : v;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadScalar conjugate() const { return QuadScalar(a_, -b_); }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_); }

  friend QuadScalar operator+(const QuadScalar& u, const QuadScalar& v) {
    return QuadScalar(u.a_ + v.a_, u.b_ + v.b_);
  }
  friend QuadScalar operator-(const QuadScalar& u, const QuadScalar& v) {
    return QuadScalar(u.a_ - v.a_, u.b_ - v.b_);
  }
  friend QuadScalar operator*(const QuadScalar& u, const QuadScalar& v) {
    return QuadScalar(u.a_ * v.a_ + Rational(2) * u.b_ * v.b_,
                      u.a_ * v.b_ + u.b_ * v.a_);
  }
  friend QuadScalar operator/(const QuadScalar& u, const QuadScalar& v) {
    return u * v.inverse();
  }
  QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
  QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
  QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

  // Exact inverse via the conjugate: 1/(a+b s2) = (a-b s2)/(a^2-2b^2).
  QuadScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational norm = a_ * a_ - Rational(2) * b_ * b_;
    return QuadScalar(a_ / norm, -b_ / norm);
  }

  friend bool operator==(const QuadScalar& u, const QuadScalar& v) {
    return u.a_ == v.a_ && u.b_ == v.b_;
  }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(2.0);
  }

  static QuadScalar pow(const QuadScalar& base, int k) {
    if (k < 0) return pow(base.inverse(), -k);
    QuadScalar acc(1), b = base;
    for (int e = k; e > 0; e >>= 1) {
      if (e & 1) acc *= b;
      if (e > 1) b *= b;
    }
    return acc;
  }

  static constexpr bool is_exact = true;

private:
  Rational a_;
  Rational b_;
};

// Gate for every verification path: floating-point scalars cannot instantiate it.
template <class S>
concept ExactScalar = S::is_exact && !std::is_floating_point_v<S> &&
    requires(const S& u, const S& v) {
      { u + v } -> std::convertible_to<S>;
      { u - v } -> std::convertible_to<S>;
      { u * v } -> std::convertible_to<S>;
      { u.is_zero() } -> std::convertible_to<bool>;
    };

inline QuadScalar promote(const Rational& r) { return QuadScalar(r); }

}  // namespace rlab
