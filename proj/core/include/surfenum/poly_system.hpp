#pragma once

#include <string>
#include <vector>

#include "surfenum/series.hpp"

namespace surfenum {

// A polynomial in a set of named symbols (series unknowns plus ordinary
// variables) with exact rational coefficients. Used to state implicit
// generating-function equations, always in the form P(...) = 0.
struct Polynomial {
    struct Term {
        Rational coeff;
        std::vector<int> exps;  // parallel to the owning system's symbol list
    };
    std::vector<Term> terms;
};

// A square system of polynomial equations among `unknowns` (series to solve
// for) over `vars` (free series variables; the first one is the progress
// variable used for truncation).
struct PolynomialSystem {
    std::vector<std::string> unknowns;
    std::vector<std::string> vars;
    std::vector<Polynomial> equations;   // each understood as "= 0"
    std::vector<std::string> sources;    // printable right-hand text (optional)

    // Parse an equation of the form "lhs = rhs" or a bare polynomial
    // (interpreted as "= 0"). Grammar: rational constants, symbols, + - * ^,
    // parentheses, unary minus. Every symbol must be a declared unknown/var.
    void add_equation(const std::string& text);

    // Canonical rendering (sorted monomials) for golden files.
    std::string canonical_text() const;
};

// Parse a polynomial over the given symbol list.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& symbols);
std::string polynomial_to_string(const Polynomial& p, const std::vector<std::string>& symbols);

// Evaluate p at the given series values (parallel to `symbols`).
TruncatedSeries evaluate_polynomial(const Polynomial& p,
                                    const std::vector<TruncatedSeries>& values);
// Partial derivative with respect to symbol index `idx`.
Polynomial differentiate_polynomial(const Polynomial& p, int idx);

// Solve the system for formal power series in the progress variable by Newton
// iteration with order doubling. `seed` supplies the low-order start (usually
// constants); the formal Jacobian at the seed must be invertible at order 0.
// The result satisfies every equation with residual exactly zero up to the
// truncation order.
std::vector<TruncatedSeries> newton_solve(const PolynomialSystem& system, int order,
                                          const std::vector<TruncatedSeries>& seed);

// Convenience: seed of constants.
std::vector<TruncatedSeries> newton_solve(const PolynomialSystem& system, int order,
                                          const std::vector<Rational>& seed_constants);

// Residual check: max |equation| coefficients; true iff all residuals vanish.
bool residuals_vanish(const PolynomialSystem& system,
                      const std::vector<TruncatedSeries>& solution);

}  // namespace surfenum
