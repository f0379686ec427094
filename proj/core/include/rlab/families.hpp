#pragma once

#include <string>
#include <vector>

#include "rlab/poly.hpp"
#include "rlab/scalars.hpp"

namespace rlab {

// Polynomial family selectors. The three Boubaker ids are three independent
// constructions of the same sequence and exist so they can be cross-checked.
enum class FamilyId {
  BoubakerRec,    // seeds 1, x, x^2+2; B_m = x B_{m-1} - B_{m-2}
  BoubakerMono,   // monomial sum with binomial C(n-p, p)
  BoubakerCoeff,  // coefficient recursion (sign-adjusted ratio, see generate())
  ChebT,          // T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}
  ChebU,          // U_0 = 1, U_1 = 2x
  ChebTTilde,     // T~_0 = 1/2, T~_n = T_n for n >= 1
  BTilde,         // seeds 1, x; same recurrence as Boubaker
  SClass,         // S_n = (B_n - 2 T_n(x/2)) / 4, n >= 2
  Fermat,         // F_1 = 1, F_2 = 3x, F_n = 3x F_{n-1} - 2 F_{n-2}
  Lucas,          // user-supplied p, q and two seed polynomials at indices 0, 1
};

struct FamilySpec {
  FamilyId id = FamilyId::BoubakerRec;
  // Lucas parameters; ignored for the fixed families.
  Poly<Rational> lucas_p;
  Poly<Rational> lucas_q;
  Poly<Rational> lucas_seed0;
  Poly<Rational> lucas_seed1;

  static FamilySpec of(FamilyId id) { return FamilySpec{id, {}, {}, {}, {}}; }
  static FamilySpec lucas(Poly<Rational> p, Poly<Rational> q,
                          Poly<Rational> seed0, Poly<Rational> seed1) {
    return FamilySpec{FamilyId::Lucas, std::move(p), std::move(q),
                      std::move(seed0), std::move(seed1)};
  }

  int min_index() const;
  std::string name() const;
};

struct PolySequence {
  FamilySpec spec;
  std::vector<Poly<Rational>> polys;  // index n stored at polys[n - spec.min_index()]
};

// floor(n/2); both printed closed forms of this index bound agree.
long long xi(long long n);

// Exact generator; throws IndexBelowDomain below the family minimum.
// Fixed families are memoized behind a lock; results have value semantics.
Poly<Rational> generate(const FamilySpec& spec, int n);

PolySequence generate_range(const FamilySpec& spec, int n_max);

// Lowest-order coefficient b_{n, xi(n)} of B_n, taken from the generated
// polynomial (the authoritative value).
Rational closing_coefficient(int n);

// The case-split closing-coefficient formula as displayed:
// even n: (-1)^{n/2} * 2, odd n: (-1)^{(n+1)/2} * (n-2).
Rational closing_coefficient_case_split(int n);

struct ClosingComparison {
  int n;
  Rational computed;    // from the recurrence polynomial
  Rational case_split;  // from the displayed formula
  bool match;
};

// Per-index comparison of the two closing-coefficient readings. The even
// entries disagree in sign; the report presents both without reconciliation.
std::vector<ClosingComparison> closing_coefficient_report(int n_max);

// Resolve a CLI-facing family name ("boubaker", "cheb-u", ...).
FamilyId family_from_name(const std::string& name);

}  // namespace rlab
