#pragma once

#include <utility>
#include <vector>

#include "surfenum/interval.hpp"
#include "surfenum/poly_system.hpp"
#include "surfenum/rational.hpp"

namespace surfenum {

// Dense univariate polynomial with integer coefficients, c[i] * x^i.
// Trailing zero coefficients are trimmed; the zero polynomial has empty c.
struct ZPoly {
    std::vector<Integer> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
};

ZPoly zpoly_derivative(const ZPoly& p);
// Divide out the integer content (gcd of coefficients, sign of the leading
// coefficient preserved).
ZPoly zpoly_primitive(const ZPoly& p);
// p / gcd(p, p'): same roots, all simple.
ZPoly zpoly_squarefree(const ZPoly& p);

Rational zpoly_eval(const ZPoly& p, const Rational& x);
int zpoly_sign_at(const ZPoly& p, const Rational& x);
// Certified interval evaluation (Horner with outward rounding).
Interval zpoly_eval(const ZPoly& p, const Interval& x);

// Extract a univariate ZPoly from a multivariate Polynomial that only uses
// symbol `var_idx`. Rational coefficients are cleared by the common
// denominator. Throws DomainError if another symbol appears.
ZPoly zpoly_from_polynomial(const Polynomial& p, int var_idx, int nsymbols);

// Number of sign variations of the Sturm chain of `p` at `x`.
// Exposed for testing; `p` must be squarefree.
int sturm_variations(const std::vector<ZPoly>& chain, const Rational& x);
std::vector<ZPoly> sturm_chain(const ZPoly& p);

// Isolating intervals (lo, hi], lo < hi, for every root of `p` in (0, bound],
// where bound is a Cauchy root bound. Works on the squarefree part, so
// multiple roots are reported once. Sorted increasingly; each interval
// contains exactly one root. Rational roots may be returned as degenerate
// [r, r] pairs.
std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const ZPoly& p);

// Shrink an isolating interval by sign-change bisection until its width is
// at most 2^-bits, returning a certified enclosure of the root. The input
// interval must satisfy sign(lo) * sign(hi) < 0 (or be degenerate).
Interval refine_root(const ZPoly& p, Rational lo, Rational hi, int bits = 200);

// Convenience: squarefree part, isolation, and refinement in one call.
// Returns certified enclosures of all distinct positive real roots of `p`,
// sorted increasingly.
std::vector<Interval> positive_real_roots(const ZPoly& p, int bits = 200);

}  // namespace surfenum
