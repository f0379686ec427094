#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Base for all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// Series with zero constant term has no multiplicative inverse.
class NotInvertible : public Error {
public:
  NotInvertible() : Error("series has zero constant term, not invertible") {}
};

// Series composition requires the inner series to vanish at 0.
class CompositionUndefined : public Error {
public:
  CompositionUndefined()
      : Error("series composition needs an inner series with zero constant term") {}
};

// Riordan denominator series g must satisfy g(0) != 0.
class InvalidDenominatorSeries : public Error {
public:
  InvalidDenominatorSeries() : Error("riordan denominator series g has g(0) = 0") {}
};

// Requested index/size exceeds the guaranteed truncation order.
class OutOfOrder : public Error {
public:
  explicit OutOfOrder(int requested, int order)
      : Error("index " + std::to_string(requested) +
              " exceeds truncation order " + std::to_string(order)) {}
};

// Truncated matrix has a zero diagonal entry, forward substitution fails.
class SingularTruncation : public Error {
public:
  explicit SingularTruncation(int k)
      : Error("zero diagonal entry at position " + std::to_string(k)) {}
};

// Family generator asked for an index below its documented minimum.
class IndexBelowDomain : public Error {
public:
  IndexBelowDomain(const std::string& family, long long n, long long min_n)
      : Error(family + " is defined for n >= " + std::to_string(min_n) +
              ", got n = " + std::to_string(n)) {}
};

class UnknownCatalogKey : public Error {
public:
  explicit UnknownCatalogKey(const std::string& key)
      : Error("unknown identity catalog key: " + key) {}
};

// Least-squares design matrix numerically rank deficient.
class IllConditioned : public Error {
public:
  explicit IllConditioned(double condition)
      : Error("design matrix is rank deficient, condition estimate " +
              std::to_string(condition)),
        condition_(condition) {}
  double condition() const { return condition_; }

private:
  double condition_;
};

// Root scan bound contained no sign change.
class ScanExhausted : public Error {
public:
  explicit ScanExhausted(double bound)
      : Error("no positive root found in (0, " + std::to_string(bound) + "]") {}
};

// Polynomial literal syntax error; column is 1-based.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int column)
      : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  int column() const { return column_; }

private:
  int column_;
};

}  // namespace rlab
