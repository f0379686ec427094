#include "rlab/families.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

using P = Poly<Rational>;

P poly_x() { return P::x(); }
P poly_const(long long v) { return P::constant(Rational(v)); }

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (long long j = 1; j <= k; ++j) {
    acc *= (n - k + j);
    acc /= j;
  }
  return acc;
}

P boubaker_rec(int n) {
  static const std::vector<P> seeds = {poly_const(1), poly_x(),
                                       P({{Rational(2), Rational(0), Rational(1)}})};
  if (n < 3) return seeds[static_cast<size_t>(n)];
  P prev2 = seeds[1], prev = seeds[2];
  for (int m = 3; m <= n; ++m) {
    P next = poly_x() * prev - prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

// Monomial form: sum_p [(n-4p)/(n-p)] C(n-p, p) (-1)^p x^{n-2p}. The binomial
// is read as C(n-p, p); n = 0 is the degenerate 0/0 case and yields 1.
P boubaker_mono(int n) {
  if (n == 0) return poly_const(1);
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for (long long p = 0; p <= xi(n); ++p) {
    Rational frac(BigInt(n - 4 * p), BigInt(n - p));
    Rational coef = frac * Rational(binomial(n - p, p));
    if (p % 2 == 1) coef = -coef;
    coeffs[static_cast<size_t>(n - 2 * p)] = coef;
  }
  return P(std::move(coeffs));
}

// Coefficient recursion: b_{n,0} = 1, b_{n,1} = -(n-4), then
//   b_{n,j+1} = -[(n-2j)(n-2j-1)(n-4j-4)] / [(j+1)(n-j-1)(n-4j)] * b_{n,j}.
// The ratio carries a sign the displayed form omits (without it the step
// j = 0 contradicts the displayed b_{n,1} already at n = 3). When n = 4j the
// ratio denominator vanishes with b_{n,j} = 0; that step is bridged by the
// closed-form coefficient (n-4j-4)/(n-j-1) C(n-j-1, j+1) (-1)^{j+1}.
P boubaker_coeff(int n) {
  if (n == 0) return poly_const(1);
  long long jmax = xi(n);
  std::vector<Rational> b(static_cast<size_t>(jmax) + 1, Rational(0));
  b[0] = Rational(1);
  if (jmax >= 1) b[1] = Rational(-(n - 4));
  for (long long j = 1; j < jmax; ++j) {
    long long den = (j + 1) * (n - j - 1) * (n - 4 * j);
    if (den == 0) {
      Rational closed(BigInt(n - 4 * (j + 1)), BigInt(n - j - 1));
      closed = closed * Rational(binomial(n - j - 1, j + 1));
      if ((j + 1) % 2 == 1) closed = -closed;
      b[static_cast<size_t>(j + 1)] = closed;
      continue;
    }
    long long num = (n - 2 * j) * (n - 2 * j - 1) * (n - 4 * j - 4);
    b[static_cast<size_t>(j + 1)] = -(Rational(num, den) * b[static_cast<size_t>(j)]);
  }
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for (long long j = 0; j <= jmax; ++j)
    coeffs[static_cast<size_t>(n - 2 * j)] = b[static_cast<size_t>(j)];
  return P(std::move(coeffs));
}

P three_term(int n, P s0, P s1, const P& xcoef, const P& constcoef) {
  // next = xcoef * prev + constcoef * prev2
  if (n == 0) return s0;
  if (n == 1) return s1;
  P prev2 = std::move(s0), prev = std::move(s1);
  for (int m = 2; m <= n; ++m) {
    P next = xcoef * prev + constcoef * prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

P cheb_t(int n) { return three_term(n, poly_const(1), poly_x(), Rational(2) * poly_x(), poly_const(-1)); }
P cheb_u(int n) { return three_term(n, poly_const(1), Rational(2) * poly_x(), Rational(2) * poly_x(), poly_const(-1)); }
P btilde(int n) { return three_term(n, poly_const(1), poly_x(), poly_x(), poly_const(-1)); }

P cheb_t_tilde(int n) {
  if (n == 0) return P::constant(Rational(1, 2));
  return cheb_t(n);
}

P s_class(int n) {
  P half_arg = cheb_t(n).scale_arg(Rational(1, 2));  // T_n(x/2)
  return Rational(1, 4) * (boubaker_rec(n) - Rational(2) * half_arg);
}

P fermat(int n) {
  // F_1 = 1, F_2 = 3x; stored with the natural index (min index 1).
  return three_term(n - 1, poly_const(1), Rational(3) * poly_x(),
                    Rational(3) * poly_x(), poly_const(-2));
}

P lucas(const FamilySpec& spec, int n) {
  return three_term(n, spec.lucas_seed0, spec.lucas_seed1, spec.lucas_p, spec.lucas_q);
}

std::string lucas_cache_key(const FamilySpec& spec) {
  std::ostringstream os;
  auto dump = [&os](const P& p) {
    os << '[';
    for (const auto& c : p.coeffs()) os << c.num() << '/' << c.den() << ',';
    os << ']';
  };
  dump(spec.lucas_p);
  dump(spec.lucas_q);
  dump(spec.lucas_seed0);
  dump(spec.lucas_seed1);
  return os.str();
}

std::mutex cache_mutex;
std::map<std::string, std::vector<P>> cache;

std::string cache_key(const FamilySpec& spec) {
  if (spec.id == FamilyId::Lucas) return "lucas:" + lucas_cache_key(spec);
  return spec.name();
}

P generate_uncached(const FamilySpec& spec, int n) {
  switch (spec.id) {
    case FamilyId::BoubakerRec: return boubaker_rec(n);
    case FamilyId::BoubakerMono: return boubaker_mono(n);
    case FamilyId::BoubakerCoeff: return boubaker_coeff(n);
    case FamilyId::ChebT: return cheb_t(n);
    case FamilyId::ChebU: return cheb_u(n);
    case FamilyId::ChebTTilde: return cheb_t_tilde(n);
    case FamilyId::BTilde: return btilde(n);
    case FamilyId::SClass: return s_class(n);
    case FamilyId::Fermat: return fermat(n);
    case FamilyId::Lucas: return lucas(spec, n);
  }
  throw Error("unreachable family id");
}

}  // namespace

long long xi(long long n) { return n / 2; }

int FamilySpec::min_index() const {
  switch (id) {
    case FamilyId::SClass: return 2;
    case FamilyId::Fermat: return 1;
    default: return 0;
  }
}

std::string FamilySpec::name() const {
  switch (id) {
    case FamilyId::BoubakerRec: return "boubaker";
    case FamilyId::BoubakerMono: return "boubaker-mono";
    case FamilyId::BoubakerCoeff: return "boubaker-coeff";
    case FamilyId::ChebT: return "cheb-t";
    case FamilyId::ChebU: return "cheb-u";
    case FamilyId::ChebTTilde: return "cheb-t-tilde";
    case FamilyId::BTilde: return "btilde";
    case FamilyId::SClass: return "s-class";
    case FamilyId::Fermat: return "fermat";
    case FamilyId::Lucas: return "lucas";
  }
  return "?";
}

FamilyId family_from_name(const std::string& name) {
  for (FamilyId id : {FamilyId::BoubakerRec, FamilyId::BoubakerMono,
                      FamilyId::BoubakerCoeff, FamilyId::ChebT, FamilyId::ChebU,
                      FamilyId::ChebTTilde, FamilyId::BTilde, FamilyId::SClass,
                      FamilyId::Fermat, FamilyId::Lucas}) {
    if (FamilySpec::of(id).name() == name) return id;
  }
  throw Error("unknown family: " + name);
}

Poly<Rational> generate(const FamilySpec& spec, int n) {
  int min_n = spec.min_index();
  if (n < min_n) throw IndexBelowDomain(spec.name(), n, min_n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& stored = cache[cache_key(spec)];
  size_t slot = static_cast<size_t>(n - min_n);
  if (slot < stored.size() && !(stored[slot].is_zero() && n >= min_n && !is_known_zero(spec, n)))
    return stored[slot];
  if (slot >= stored.size()) stored.resize(slot + 1);
  stored[slot] = generate_uncached(spec, n);
  return stored[slot];
}

PolySequence generate_range(const FamilySpec& spec, int n_max) {
  PolySequence seq{spec, {}};
  for (int n = spec.min_index(); n <= n_max; ++n) seq.polys.push_back(generate(spec, n));
  return seq;
}

Rational closing_coefficient(int n) {
  if (n < 1) throw IndexBelowDomain("closing-coefficient", n, 1);
  const P b = generate(FamilySpec::of(FamilyId::BoubakerRec), n);
  return b.coeff(static_cast<int>(n - 2 * xi(n)));
}

Rational closing_coefficient_case_split(int n) {
  if (n < 1) throw IndexBelowDomain("closing-coefficient", n, 1);
  if (n % 2 == 0) {
    Rational v(2);
    return (n / 2) % 2 == 0 ? v : -v;
  }
  Rational v(n - 2);
  return ((n + 1) / 2) % 2 == 0 ? v : -v;
}

std::vector<ClosingComparison> closing_coefficient_report(int n_max) {
  std::vector<ClosingComparison> report;
  for (int n = 1; n <= n_max; ++n) {
    Rational computed = closing_coefficient(n);
    Rational printed = closing_coefficient_case_split(n);
    report.push_back({n, computed, printed, computed == printed});
  }
  return report;
}

}  // namespace rlab
