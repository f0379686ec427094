#pragma once

#include <utility>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/poly.hpp"
#include "rlab/series.hpp"

namespace rlab {

// Lower-triangular matrix stored as ragged rows: row n holds entries 0..n.
template <ExactScalar S>
using TriMatrix = std::vector<std::vector<S>>;

// Riordan array in the two-series parameterization T(f|g) with g(0) != 0.
// Entry (n,k) is the coefficient of x^n in x^k * f / g^{k+1}; this is the
// unique convention reproducing the displayed reference matrices column by
// column (column k+1 is column k divided by g, shifted one row down).
template <ExactScalar S>
class RiordanArray {
public:
  RiordanArray(Series<S> f, Series<S> g)
      : f_(std::move(f)), g_(std::move(g)) {
    if (g_.coeff(0).is_zero()) throw InvalidDenominatorSeries();
    int n = std::min(f_.order(), g_.order());
    if (f_.order() != n) f_ = f_.truncate(n);
    if (g_.order() != n) g_ = g_.truncate(n);
  }

  static RiordanArray identity(int order) {
    return RiordanArray(Series<S>::constant(S(1), order),
                        Series<S>::constant(S(1), order));
  }

  const Series<S>& f() const { return f_; }
  const Series<S>& g() const { return g_; }
  int order() const { return f_.order(); }

  S entry(int n, int k) const {
    if (n > order() || k > order()) throw OutOfOrder(std::max(n, k), order());
    if (k > n) return S(0);
    Series<S> col = f_ / g_;
    for (int j = 0; j < k; ++j) col = col / g_;
    return col.coeff(n - k);
  }

  // Truncated matrix of size (N+1) x (N+1); row n holds entries 0..n.
  TriMatrix<S> matrix(int size) const {
    if (size > order()) throw OutOfOrder(size, order());
    TriMatrix<S> m(static_cast<size_t>(size) + 1);
    Series<S> gi = g_.inverse();
    Series<S> col = f_ * gi;  // f/g = column 0
    for (int k = 0; k <= size; ++k) {
      for (int n = k; n <= size; ++n) {
        if (m[n].empty()) m[n].resize(static_cast<size_t>(n) + 1, S(0));
        m[n][k] = col.coeff(n - k);
      }
      if (k < size) col = col * gi;
    }
    return m;
  }

  // Group law: T(f|g) T(f'|g') = T(f * f'(x/g) | g * g'(x/g)).
  // The truncated matrix of the product equals the matrix product of the
  // operands' truncated matrices.
  RiordanArray mul(const RiordanArray& other) const {
    int n = std::min(order(), other.order());
    Series<S> inner = Series<S>::from_poly(Poly<S>::x(), n) * g_.truncate(n).inverse();
    Series<S> f2 = other.f_.truncate(n).compose(inner);
    Series<S> g2 = other.g_.truncate(n).compose(inner);
    return RiordanArray(f_.truncate(n) * f2, g_.truncate(n) * g2);
  }

  // Row polynomials p_n(t) = sum_k entry(n,k) t^k.
  std::vector<Poly<S>> row_polynomials(int size) const {
    TriMatrix<S> m = matrix(size);
    std::vector<Poly<S>> rows;
    rows.reserve(m.size());
    for (auto& r : m) rows.emplace_back(std::move(r));
    return rows;
  }

private:
  Series<S> f_;
  Series<S> g_;
};

// Exact product of truncated lower-triangular matrices (ragged rows).
template <ExactScalar S>
TriMatrix<S> tri_mul(const TriMatrix<S>& a, const TriMatrix<S>& b) {
  TriMatrix<S> r(a.size());
  for (size_t n = 0; n < a.size(); ++n) {
    r[n].assign(n + 1, S(0));
    for (size_t j = 0; j <= n; ++j) {
      if (a[n][j].is_zero()) continue;
      for (size_t k = 0; k <= j; ++k) r[n][k] += a[n][j] * b[j][k];
    }
  }
  return r;
}

// Exact inverse of a truncated lower-triangular matrix by forward
// substitution; throws SingularTruncation on a zero diagonal entry.
template <ExactScalar S>
TriMatrix<S> tri_inverse(const TriMatrix<S>& m) {
  size_t size = m.size();
  TriMatrix<S> x(size);
  for (size_t k = 0; k < size; ++k)
    if (m[k][k].is_zero()) throw SingularTruncation(static_cast<int>(k));
  for (size_t n = 0; n < size; ++n) {
    x[n].assign(n + 1, S(0));
    x[n][n] = S(1) / m[n][n];
    for (size_t k = 0; k < n; ++k) {
      // sum_j m[n][j] x[j][k] = 0 for n > k
      S acc(0);
      for (size_t j = k; j < n; ++j) acc += m[n][j] * x[j][k];
      x[n][k] = -(acc / m[n][n]);
    }
  }
  return x;
}

// Inverse of the truncated matrix of a Riordan array.
template <ExactScalar S>
TriMatrix<S> riordan_inverse(const RiordanArray<S>& a, int size) {
  return tri_inverse(a.matrix(size));
}

}  // namespace rlab
