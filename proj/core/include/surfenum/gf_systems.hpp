#pragma once

#include <string>
#include <vector>

#include "surfenum/poly_system.hpp"
#include "surfenum/rational.hpp"
#include "surfenum/series.hpp"

namespace surfenum {

// A shipped implicit equation (or square system) with a stable name. The
// canonical_text of every named system is pinned in a golden file; any drift
// in the polynomial data fails the test suite.
struct NamedSystem {
    std::string name;
    PolynomialSystem system;
};

// Registry of all shipped systems, in a fixed order:
//   s0_quartic    -- quartic for the simple planar triangulation series S0(y)
//   shat0_cubic   -- cubic for the loopless planar triangulation series Shat0(y)
//   n_sextic      -- sextic for the planar network series N(v)
//   a_octic       -- degree-9 polynomial satisfied by 1 + A(v)
//   eq_network    -- parametric pair {N, u} over v for networks
//   systemq       -- six-equation system {Q, A, S, P, H, u} over v
//   rho1_sextic   -- integer sextic locating the singular parameter for genus
//                    growth constant gamma_1
//   rho3_sextic   -- integer sextic locating the singular parameter for gamma_3
const std::vector<NamedSystem>& named_systems();
const NamedSystem& get_system(const std::string& name);  // throws DomainError

// S0(y): simple planar triangulations rooted at an edge, counted by edges.
// Solved from s0_quartic; S0(0) = 0 and all coefficients at y^m with 3|m.
TruncatedSeries solve_S0(int order);

// Shat0(y): loopless planar triangulations, from shat0_cubic.
TruncatedSeries solve_Shat0(int order);

// P0(y,u): planar quasi triangulations, u marking the root face valency.
// Computed by the catalytic recursion
//   P0 = 1 + y u^2 P0^2 + y (P0 - 1)/u - y^2 u P0 - S0 (P0 - 1)
// with S0 taken from solve_S0. Terms with u-degree above max_u_degree are
// trimmed from the result (the computation itself is exact).
TruncatedSeries solve_quasi_P0(int order, int max_u_degree);

// Loopless variant: joint iteration of
//   Phat0 = 1 + y u^2 Phat0^2 + y (Phat0 - 1)/u - y^2 u Phat0
//           - y^2 u Shat0 Phat0
// with the closure Shat0 = [u^3] Phat0.
TruncatedSeries solve_quasi_P0hat(int order, int max_u_degree);

// Coefficient-wise verification of the root-edge substitution identity
//   R_g(y (1 + Shat0(y))) == Shat_g(y) (1 + Shat0) / (1 + Shat0 + Theta_y Shat0)
// for arbitrary input series, up to y^order. This is the exact form for
// genus >= 1, where the simple core of a loopless triangulation is canonical.
bool rtot_identity(const TruncatedSeries& r_g, const TruncatedSeries& shat_g,
                   const TruncatedSeries& shat0, int order);

// Degenerate planar form of the same substitution: on the sphere the core
// decomposition has no root-marking correction and the exact identity is
//   R_0(y (1 + Shat0(y))) == Shat0(y).
bool rtot_identity_planar(const TruncatedSeries& r_0, const TruncatedSeries& shat0, int order);

// Verifies the genus-appropriate identity with R_g and Shat_g taken from the
// triangulation census and Shat0 from solve_Shat0. Requires order within the
// census budget.
bool check_rtot(int g, int order, const std::string& cache_dir = "");

// N(v): planar networks after the univariate substitution. Unique branch with
// N(0) = 0; satisfies both eq_network (jointly with u(v)) and n_sextic.
TruncatedSeries solve_network(int order);

struct QSystemSolution {
    TruncatedSeries Q;  // loop-rooted connected cubic planar multigraphs
    TruncatedSeries A;
    TruncatedSeries S;
    TruncatedSeries P;
    TruncatedSeries H;
    TruncatedSeries u;
};

// Solves systemq for the combinatorial branch (all unknowns vanish at v = 0).
QSystemSolution solve_Q(int order);

// C0(v): exponential generating series of connected cubic planar multigraphs
// under the weighted count, [v^j] = class_count(C, 0, 2j, weighted) / (2j)!.
// Excludes the cubic one-vertex loop component Phi.
TruncatedSeries connected_cubic_C0(int order, const std::string& cache_dir = "");

// G0(v) = exp(C0(v) + phi_weight * v): all cubic planar multigraphs, possibly
// disconnected, with Phi components contributing phi_weight per vertex pair.
// The census-matching weight is 1/12 (the exponential formula applies the
// component weight W(Phi) = 1/6 to v^2/2! per Phi component).
TruncatedSeries assemble_G0(int order, const Rational& phi_weight = Rational(1, 12),
                            const std::string& cache_dir = "");

// --- polynomial elimination utilities (used to derive/validate the pinned
// --- closed forms mechanically) ---

// Sylvester resultant of p and q with respect to symbol var_idx; the result
// does not involve that symbol. nsymbols is the length of the shared symbol
// list. Throws DomainError when either polynomial has degree 0 in the symbol.
Polynomial poly_resultant(const Polynomial& p, const Polynomial& q, int var_idx,
                          int nsymbols);

// Pseudo-remainder of a by b with respect to symbol var_idx (b's leading
// coefficient in that symbol multiplies a as needed; exact, fraction-free).
Polynomial poly_pseudo_remainder(const Polynomial& a, const Polynomial& b, int var_idx,
                                 int nsymbols);

}  // namespace surfenum
