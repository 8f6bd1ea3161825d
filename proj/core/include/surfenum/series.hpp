#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfenum/errors.hpp"
#include "surfenum/rational.hpp"

namespace surfenum {

// Multivariate formal power series with exact rational coefficients,
// truncated in one designated "progress" variable (y or v in practice).
// Catalytic variables (u, ...) are carried exactly with unbounded degree.
//
// Invariants:
//  * no stored zero coefficients,
//  * no stored term whose progress-variable exponent exceeds `truncation`,
//  * arithmetic results carry the minimum truncation of the operands.
class TruncatedSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::string> vars, int trunc_var, int truncation);

    // A zero/constant/monomial series over the given variables.
    static TruncatedSeries zero(std::vector<std::string> vars, int trunc_var, int truncation);
    static TruncatedSeries constant(std::vector<std::string> vars, int trunc_var, int truncation,
                                    const Rational& c);
    static TruncatedSeries monomial(std::vector<std::string> vars, int trunc_var, int truncation,
                                    const Exponents& exps, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int trunc_var() const { return trunc_var_; }
    int truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int var_index(const std::string& name) const;  // throws UnknownVariable

    // Coefficient of an exact exponent vector (zero when absent).
    Rational coeff(const Exponents& exps) const;
    // Coefficient of progress_var^k when the series is univariate.
    Rational coeff1(int k) const;

    // Add a term in place (used by builders); drops silently beyond truncation.
    void add_term(const Exponents& exps, const Rational& c);

    // Lower the truncation bound (drops terms).
    TruncatedSeries truncated(int new_truncation) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries& o) const;

    // Multiplicative inverse. Requires the coefficient at progress-degree 0 to
    // be a single nonzero constant term.
    TruncatedSeries inverse() const;

    // exp(F) for F with zero constant term.
    TruncatedSeries exp() const;

    // Theta operator: each term scaled by its exponent in `var`.
    TruncatedSeries pointing(const std::string& var) const;

    // Formal composition: substitute `replacement` for `var`.
    TruncatedSeries substitute(const std::string& var, const TruncatedSeries& replacement) const;

    // Convenience: substitute var -> 0.
    TruncatedSeries at_zero(const std::string& var) const;

private:
    void check_compatible(const TruncatedSeries& o) const;

    std::vector<std::string> vars_;
    int trunc_var_ = 0;
    int truncation_ = 0;
    TermMap terms_;
};

enum class SubstitutionMode { weighted, unweighted, simple };

// The univariate substitution for cubic multigraph series over (x,y,z,w):
//   x^{2n} y^m z^k w^l  ->  2^{-(k+l)} v^n   (weighted)
//                       ->  v^n              (unweighted)
//                       ->  v^n iff k=l=0    (simple)
// Requires the cubic parity 2k+l+m = 3n for every monomial.
TruncatedSeries univariate_substitute(const TruncatedSeries& s, SubstitutionMode mode);

// Checks 3*Theta_v(F(v)) == Theta_y(F)|substituted, coefficient-wise.
bool theta_v_check(const TruncatedSeries& f, SubstitutionMode mode = SubstitutionMode::weighted);

// Coefficient-wise dominance: 0 <= [term]lhs <= [term]rhs everywhere.
bool dominance_check(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

}  // namespace surfenum
