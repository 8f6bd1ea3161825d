#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfenum/interval.hpp"
#include "surfenum/poly_system.hpp"
#include "surfenum/series.hpp"
#include "surfenum/zpoly.hpp"

namespace surfenum {

// ---------------------------------------------------------------------------
// Algebraic curves P(var, F) = 0
// ---------------------------------------------------------------------------

// A bivariate polynomial P(var, F) with rational coefficients defining an
// algebraic function F(var). Construction verifies that P is squarefree in F
// (equivalently, disc_F(P) is not identically zero).
struct AlgebraicCurve {
    std::vector<std::string> symbols;  // {F_name, var_name}
    Polynomial poly;                   // over `symbols`
    static constexpr int kF = 0;
    static constexpr int kVar = 1;
};

// Build a curve from a single-equation, single-unknown, single-variable
// system (the registry systems s0_quartic, shat0_cubic, n_sextic, a_octic).
AlgebraicCurve curve_from_system(const PolynomialSystem& system);

int curve_degree_F(const AlgebraicCurve& curve);
// Coefficient of F^k as a univariate integer polynomial in var.
ZPoly curve_coefficient(const AlgebraicCurve& curve, int k);
// disc_F(P) = Res_F(P, dP/dF) as an integer polynomial in var.
ZPoly curve_discriminant(const AlgebraicCurve& curve);

// Locate the dominant (positive real) singularity of the branch of F
// described by `branch`, an exact Taylor prefix of the combinatorial
// solution. Candidates are the positive real roots of disc_F(P) and of the
// leading F-coefficient; the result is the smallest candidate consistent
// with the branch's radius of convergence, validated against trailing
// coefficient ratios of `branch`. Throws CertificationError when there is
// no positive candidate or none is consistent with the branch.
Interval dominant_singularity(const AlgebraicCurve& curve, const TruncatedSeries& branch,
                              int bits = 200);

// ---------------------------------------------------------------------------
// Singular expansions on the half-integer grid
// ---------------------------------------------------------------------------

// One term c * X^e * (log X)^delta of a local expansion in X = 1 - var/rho.
struct SingularTerm {
    Interval coeff;
    Rational exponent;     // on the half-integer grid
    bool log_factor = false;
};

// F(var) = sum(terms) + O(X^error_exponent) as var -> rho from below.
// Exponents are strictly increasing.
struct SingularExpansion {
    Interval rho;
    std::vector<SingularTerm> terms;
    Rational error_exponent;
};

// Expand the branch of `curve` at its singularity `rho`. Handles the
// fully-degenerate critical point P = P_F = P_var = 0 (exponent grid
// {0, 1, 3/2, 2, ...}); `depth` is the number of half-steps beyond the
// constant term, so depth >= 3 reaches the X^{3/2} term. The sign of the
// X^{3/2} coefficient is fixed by requiring asymptotically positive
// counting coefficients (Gamma(-3/2) > 0). Throws CertificationError if
// the critical point does not have the expected cusp structure (e.g. a
// square-root branch point, which would need the X^{1/2} grid) or if an
// interval sign cannot be certified.
SingularExpansion puiseux_expand(const AlgebraicCurve& curve, const Interval& rho,
                                 const TruncatedSeries& branch, int depth = 4);

// Interval coefficient of X^e (zero interval when absent).
Interval expansion_coefficient(const SingularExpansion& e, const Rational& exponent);

// Evaluate the truncated expansion at a numeric X (for consistency checks).
Interval expansion_eval(const SingularExpansion& e, const Interval& x);

// Term-wise arithmetic. Operands of add/multiply must share rho (interval
// overlap is not enough: both must contain the midpoint of the other);
// otherwise a DomainError is thrown. Multiplication of two log-bearing
// terms is unsupported.
SingularExpansion expansion_add(const SingularExpansion& a, const SingularExpansion& b);
SingularExpansion expansion_multiply(const SingularExpansion& a, const SingularExpansion& b);
SingularExpansion expansion_scale(const SingularExpansion& a, const Interval& c);
// d/dvar and its inverse; integrate maps c*X^{-1} to -c*rho*log X and
// fixes the constant of integration to zero.
SingularExpansion expansion_differentiate(const SingularExpansion& a);
SingularExpansion expansion_integrate(const SingularExpansion& a);
// sqrt of an expansion whose constant term is positive.
SingularExpansion expansion_sqrt(const SingularExpansion& a);

// ---------------------------------------------------------------------------
// Transfer
// ---------------------------------------------------------------------------

// [var^n] F ~ constant * n^power * rho^{-n} along n = 0 mod stride
// (zero off-stride). `log_case` marks the c*log X source, where the
// asymptotic is (-c) * n^{-1} * rho^{-n}.
struct CoefficientAsymptotic {
    Interval rho;
    Rational power;
    Interval constant;
    int stride = 1;
    bool log_case = false;
};

// Read the leading singular term off an expansion. `stride` is the number
// of conjugate dominant singularities (3 for series counted by edges with
// period-3 support). Throws CertificationError("no singular part") when
// every term is analytic (integer exponent, no log).
CoefficientAsymptotic transfer(const SingularExpansion& e, int stride = 1);

// Numeric estimate of [var^n] F from the transfer data.
Interval transfer_estimate(const CoefficientAsymptotic& a, long n);

// Gamma(p/q) as an interval for half-integer arguments (q in {1,2});
// throws DomainError at non-positive integers (poles).
Interval gamma_half_integer(const Rational& x);

// ---------------------------------------------------------------------------
// Empirical growth fitting and constants
// ---------------------------------------------------------------------------

struct GrowthFit {
    double rho;
    double exponent;
};

// Least-squares fit log|a_n| = c - n log rho + e log n over the trailing
// window of nonzero coefficients (indices = stride * k). Requires at least
// 12 nonzero terms past index 0; throws CertificationError otherwise.
GrowthFit fit_growth(const std::vector<Rational>& coeffs, int stride = 1);

// gamma = rho^{-1/2}; rho must be a positive interval.
Interval growth_constant(const Interval& rho);

// A certified named constant for reporting.
struct ConstantReport {
    std::string name;
    std::string closed_form;
    Interval value;
};

// The standard table: rho_S, rho_Shat, rho_N, rho_Q, rho_D, gamma_1,
// gamma_2, gamma_3. Certified to width <= 1e-12 (the gammas to <= 1e-10).
std::vector<ConstantReport> standard_constants();

// JSON rendering: {"name":..., "closed_form":..., "interval":[lo,hi],
// "digits":...} per line, `digits` significant digits in the bounds.
std::string constants_report_json(const std::vector<ConstantReport>& reports, int digits = 20);

}  // namespace surfenum
