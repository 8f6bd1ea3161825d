#include "surfenum/gf_systems.hpp"

#include <map>
#include <utility>

#include "surfenum/census.hpp"
#include "surfenum/errors.hpp"
#include "surfenum/graph_census.hpp"

namespace surfenum {

namespace {

PolynomialSystem make_system(std::vector<std::string> unknowns, std::vector<std::string> vars,
                             const std::vector<std::string>& equations) {
    PolynomialSystem sys;
    sys.unknowns = std::move(unknowns);
    sys.vars = std::move(vars);
    for (const auto& eq : equations) sys.add_equation(eq);
    return sys;
}

std::vector<NamedSystem> build_registry() {
    std::vector<NamedSystem> reg;
    reg.push_back({"s0_quartic",
                   make_system({"S"}, {"y"},
                               {"S^4 + 3*S^3 + S^2*(3 + 8*y^3) + S*(1 - 20*y^3) = "
                                "(1 - 16*y^3)*y^3"})});
    reg.push_back({"shat0_cubic",
                   make_system({"S"}, {"y"},
                               {"16*S^3*y^6 + 48*S^2*y^6 + 8*S^2*y^3 + 48*S*y^6 "
                                "- 20*S*y^3 + S + 16*y^6 - y^3"})});
    reg.push_back({"n_sextic",
                   make_system({"N"}, {"v"},
                               {"16*N^6*v^2 + N^5*v*(32 + 96*v) + N^4*(16 + 56*v + 240*v^2) "
                                "+ N^3*(24 - 25*v + 320*v^2) + N^2*(12 - 91*v + 240*v^2) "
                                "+ N*(2 - 43*v + 96*v^2) - v*(1 - 16*v)"})});
    reg.push_back({"a_octic",
                   make_system({"A"}, {"v"},
                               {"4 - 52*A^2 + 240*A^4 - 448*A^6 + 256*A^8 "
                                "+ A^3*(336 + 1848*A^2 - 2400*A^4)*v "
                                "+ A^6*(3017 + 1024*A^2)*v^2 + 4096*A^9*v^3"})});
    reg.push_back({"eq_network",
                   make_system({"N", "u"}, {"v"},
                               {"2*N = u*(1 - 2*u)", "v*(1 + N)^3 = u*(1 - u)^3"})});
    reg.push_back({"systemq",
                   make_system({"Q", "A", "S", "P", "H", "u"}, {"v"},
                               {"Q = (1/2)*v*A + (1/2)*Q^2 + (1/2)*v",
                                "A = Q + S + P + H",
                                "S*(A + 1) = A^2",
                                "P = (1/2)*v*A^2 + v*A + (1/2)*v",
                                "2*H*(1 + A) = u*(1 - 2*u) - u*(1 - u)^3",
                                "v*(1 + A)^3 = u*(1 - u)^3"})});
    reg.push_back({"rho1_sextic",
                   make_system({"u"}, {"v"},
                               {"-46656 + 139968*u + 9524176*u^2 - 1763856*u^3 "
                                "+ 121716*u^4 + 8748*u^5 + 729*u^6"})});
    reg.push_back({"rho3_sextic",
                   make_system({"u"}, {"v"},
                               {"-46656 - 139968*u + 6043120*u^2 - 1717200*u^3 "
                                "- 69228*u^4 - 8748*u^5 + 729*u^6"})});
    return reg;
}

// --- helpers for the catalytic (y,u) iteration ---

const std::vector<std::string> kYU = {"y", "u"};

TruncatedSeries yu_monomial(int order, int ydeg, int udeg, const Rational& c) {
    return TruncatedSeries::monomial(kYU, 0, order, {ydeg, udeg}, c);
}

// (s - [constant term]) / u; every remaining term must have positive u-degree.
TruncatedSeries drop_one_div_u(const TruncatedSeries& s) {
    TruncatedSeries out(kYU, 0, s.truncation());
    for (const auto& [exps, c] : s.terms()) {
        if (exps[0] == 0 && exps[1] == 0) continue;  // the constant 1
        if (exps[1] == 0)
            throw InternalError("catalytic iteration: (P-1) not divisible by u");
        out.add_term({exps[0], exps[1] - 1}, c);
    }
    return out;
}

// Coefficient of u^k, as a univariate series in y.
TruncatedSeries u_coefficient(const TruncatedSeries& s, int k) {
    TruncatedSeries out({"y"}, 0, s.truncation());
    for (const auto& [exps, c] : s.terms())
        if (exps[1] == k) out.add_term({exps[0]}, c);
    return out;
}

// Lift a univariate series in y to the (y,u) ring.
TruncatedSeries lift_yu(const TruncatedSeries& s) {
    TruncatedSeries out(kYU, 0, s.truncation());
    for (const auto& [exps, c] : s.terms()) out.add_term({exps[0], 0}, c);
    return out;
}

TruncatedSeries trim_u_degree(const TruncatedSeries& s, int max_u_degree) {
    TruncatedSeries out(kYU, 0, s.truncation());
    for (const auto& [exps, c] : s.terms())
        if (exps[1] <= max_u_degree) out.add_term(exps, c);
    return out;
}

// Drop terms of y-degree above k without lowering the truncation bound.
TruncatedSeries drop_above(const TruncatedSeries& s, int k) {
    TruncatedSeries out(kYU, 0, s.truncation());
    for (const auto& [exps, c] : s.terms())
        if (exps[0] <= k) out.add_term(exps, c);
    return out;
}

// Shared driver for baseplanar / basedouble. When `loopless` the subtraction
// term is y^2 u Shat0 P with Shat0 = [u^3]P (self-consistent closure);
// otherwise it is S0 (P - 1) with S0 supplied by the caller.
TruncatedSeries quasi_iteration(int order, bool loopless, const TruncatedSeries& s0_input) {
    if (order < 0) throw DomainError("quasi iteration: negative order");
    const TruncatedSeries one = TruncatedSeries::constant(kYU, 0, order, Rational(1));
    const TruncatedSeries yu2 = yu_monomial(order, 1, 2, Rational(1));
    const TruncatedSeries y1 = yu_monomial(order, 1, 0, Rational(1));
    const TruncatedSeries y2u = yu_monomial(order, 2, 1, Rational(1));
    TruncatedSeries p = one;
    // After pass k the series is exact to y-order k+1; terms beyond the
    // trusted order are dropped before each pass (they would otherwise feed
    // untrusted data through the division by u).
    const TruncatedSeries s0_lifted = loopless ? one : lift_yu(s0_input);
    for (int k = 0; k < order; ++k) {
        const TruncatedSeries pt = drop_above(p, k);
        TruncatedSeries next = one + yu2 * pt * pt + y1 * drop_one_div_u(pt) - y2u * pt;
        if (loopless) {
            next = next - y2u * lift_yu(u_coefficient(pt, 3)) * pt;
        } else {
            next = next - s0_lifted * (pt - one);
        }
        p = drop_above(next, k + 1);
    }
    return p;
}

Rational factorial_rational(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(1) / Rational(f);
}

// --- multivariate polynomial arithmetic on Polynomial term lists ---

using PolyMap = std::map<std::vector<int>, Rational>;

PolyMap to_map(const Polynomial& p) {
    PolyMap m;
    for (const auto& t : p.terms) {
        auto [it, fresh] = m.emplace(t.exps, t.coeff);
        if (!fresh) it->second = it->second + t.coeff;
    }
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == Rational(0)) ? m.erase(it) : std::next(it);
    return m;
}

Polynomial from_map(const PolyMap& m) {
    Polynomial p;
    for (const auto& [e, c] : m) p.terms.push_back({c, e});
    return p;
}

PolyMap map_add(const PolyMap& a, const PolyMap& b, const Rational& scale_b) {
    PolyMap r = a;
    for (const auto& [e, c] : b) {
        auto [it, fresh] = r.emplace(e, c * scale_b);
        if (!fresh) {
            it->second = it->second + c * scale_b;
            if (it->second == Rational(0)) r.erase(it);
        }
    }
    return r;
}

PolyMap map_mul(const PolyMap& a, const PolyMap& b) {
    PolyMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second = it->second + ca * cb;
                if (it->second == Rational(0)) r.erase(it);
            }
        }
    return r;
}

int map_degree(const PolyMap& m, int var_idx) {
    int d = -1;
    for (const auto& [e, c] : m) d = std::max(d, e[var_idx]);
    return d;  // -1 for the zero polynomial
}

// Coefficient of var_idx^k, with that exponent slot zeroed.
PolyMap map_coefficient(const PolyMap& m, int var_idx, int k) {
    PolyMap r;
    for (const auto& [e, c] : m)
        if (e[var_idx] == k) {
            std::vector<int> e2 = e;
            e2[var_idx] = 0;
            r.emplace(std::move(e2), c);
        }
    return r;
}

// Determinant by expansion along the first remaining column, with zero
// pruning. Matrices here are small (Sylvester matrices of low-degree pairs).
PolyMap map_determinant(const std::vector<std::vector<PolyMap>>& mat, std::vector<int> rows,
                        int col, int width) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return PolyMap{{std::vector<int>(width, 0), Rational(1)}};
    PolyMap det;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        const PolyMap& pivot = mat[rows[i]][col];
        if (!pivot.empty()) {
            std::vector<int> rest;
            rest.reserve(n - 1);
            for (int j = 0; j < n; ++j)
                if (j != i) rest.push_back(rows[j]);
            PolyMap minor = map_determinant(mat, rest, col + 1, width);
            det = map_add(det, map_mul(pivot, minor), Rational(sign));
        }
        sign = -sign;
    }
    return det;
}

}  // namespace

const std::vector<NamedSystem>& named_systems() {
    static const std::vector<NamedSystem> registry = build_registry();
    return registry;
}

const NamedSystem& get_system(const std::string& name) {
    for (const auto& ns : named_systems())
        if (ns.name == name) return ns;
    throw DomainError("unknown named system: " + name);
}

TruncatedSeries solve_S0(int order) {
    if (order < 3) throw DomainError("solve_S0: order must be at least 3");
    return newton_solve(get_system("s0_quartic").system, order, {Rational(0)})[0];
}

TruncatedSeries solve_Shat0(int order) {
    if (order < 3) throw DomainError("solve_Shat0: order must be at least 3");
    return newton_solve(get_system("shat0_cubic").system, order, {Rational(0)})[0];
}

TruncatedSeries solve_quasi_P0(int order, int max_u_degree) {
    const TruncatedSeries s0 = solve_S0(std::max(order, 3));
    return trim_u_degree(quasi_iteration(order, false, s0.truncated(order)), max_u_degree);
}

TruncatedSeries solve_quasi_P0hat(int order, int max_u_degree) {
    const TruncatedSeries unused({"y"}, 0, order);
    return trim_u_degree(quasi_iteration(order, true, unused), max_u_degree);
}

bool rtot_identity(const TruncatedSeries& r_g, const TruncatedSeries& shat_g,
                   const TruncatedSeries& shat0, int order) {
    const std::vector<std::string> vars = {"y"};
    const TruncatedSeries one = TruncatedSeries::constant(vars, 0, order, Rational(1));
    const TruncatedSeries y = TruncatedSeries::monomial(vars, 0, order, {1}, Rational(1));
    const TruncatedSeries blow = one + shat0.truncated(order);
    const TruncatedSeries lhs = r_g.truncated(order).substitute("y", y * blow);
    const TruncatedSeries rhs =
        shat_g.truncated(order) * blow * (blow + shat0.truncated(order).pointing("y")).inverse();
    return lhs.truncated(order) == rhs.truncated(order);
}

bool rtot_identity_planar(const TruncatedSeries& r_0, const TruncatedSeries& shat0, int order) {
    const std::vector<std::string> vars = {"y"};
    const TruncatedSeries one = TruncatedSeries::constant(vars, 0, order, Rational(1));
    const TruncatedSeries y = TruncatedSeries::monomial(vars, 0, order, {1}, Rational(1));
    const TruncatedSeries lhs =
        r_0.truncated(order).substitute("y", y * (one + shat0.truncated(order)));
    return lhs.truncated(order) == shat0.truncated(order);
}

bool check_rtot(int g, int order, const std::string& cache_dir) {
    if (order > census_budget(MapFlavor::triangulation))
        throw DomainError("check_rtot: order exceeds the triangulation census budget");
    const std::vector<std::string> vars = {"y"};
    TruncatedSeries r_g(vars, 0, order);
    TruncatedSeries shat_g(vars, 0, order);
    for (int m = 3; m <= order; m += 3) {
        const CountTable table = census_triangulations(m, cache_dir);
        r_g.add_term({m}, Rational(table.get(g, m, "R")));
        shat_g.add_term({m}, Rational(table.get(g, m, "Shat")));
    }
    const TruncatedSeries shat0 = solve_Shat0(std::max(order, 3));
    return g == 0 ? rtot_identity_planar(r_g, shat0, order)
                  : rtot_identity(r_g, shat_g, shat0, order);
}

TruncatedSeries solve_network(int order) {
    if (order < 1) throw DomainError("solve_network: order must be at least 1");
    auto sol = newton_solve(get_system("eq_network").system, order, {Rational(0), Rational(0)});
    const TruncatedSeries& n = sol[0];
    // The univariate sextic must annihilate the same branch.
    const TruncatedSeries v = TruncatedSeries::monomial({"v"}, 0, order, {1}, Rational(1));
    const Polynomial& sextic = get_system("n_sextic").system.equations[0];
    if (!evaluate_polynomial(sextic, {n, v}).is_zero())
        throw InternalError("solve_network: sextic residual nonzero");
    return n;
}

QSystemSolution solve_Q(int order) {
    if (order < 1) throw DomainError("solve_Q: order must be at least 1");
    auto sol = newton_solve(get_system("systemq").system, order,
                            std::vector<Rational>(6, Rational(0)));
    QSystemSolution q{sol[0], sol[1], sol[2], sol[3], sol[4], sol[5]};
    // The printed degree-9 polynomial annihilates 1 + A.
    const TruncatedSeries v = TruncatedSeries::monomial({"v"}, 0, order, {1}, Rational(1));
    const TruncatedSeries abar =
        TruncatedSeries::constant({"v"}, 0, order, Rational(1)) + q.A;
    const Polynomial& octic = get_system("a_octic").system.equations[0];
    if (!evaluate_polynomial(octic, {abar, v}).is_zero())
        throw InternalError("solve_Q: octic residual nonzero at 1 + A");
    return q;
}

TruncatedSeries connected_cubic_C0(int order, const std::string& cache_dir) {
    if (2 * order > graph_census_budget())
        throw DomainError("connected_cubic_C0: order exceeds the graph census budget");
    TruncatedSeries c0({"v"}, 0, order);
    for (int j = 1; j <= order; ++j) {
        const Rational count =
            class_count(GraphClass::C, 0, 2 * j, CountMode::weighted, false, cache_dir);
        c0.add_term({j}, count * factorial_rational(2 * j));
    }
    return c0;
}

TruncatedSeries assemble_G0(int order, const Rational& phi_weight,
                            const std::string& cache_dir) {
    const TruncatedSeries c0 = connected_cubic_C0(order, cache_dir);
    const TruncatedSeries phi =
        TruncatedSeries::monomial({"v"}, 0, order, {1}, phi_weight);
    return (c0 + phi).exp();
}

Polynomial poly_resultant(const Polynomial& p, const Polynomial& q, int var_idx,
                          int nsymbols) {
    const PolyMap pm = to_map(p), qm = to_map(q);
    const int dp = map_degree(pm, var_idx), dq = map_degree(qm, var_idx);
    if (dp < 1 || dq < 1)
        throw DomainError("poly_resultant: both inputs must have positive degree");
    const int n = dp + dq;
    const PolyMap zero;
    std::vector<std::vector<PolyMap>> syl(n, std::vector<PolyMap>(n, zero));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k) syl[row][row + dp - k] = map_coefficient(pm, var_idx, k);
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            syl[dq + row][row + dq - k] = map_coefficient(qm, var_idx, k);
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    return from_map(map_determinant(syl, rows, 0, nsymbols));
}

Polynomial poly_pseudo_remainder(const Polynomial& a, const Polynomial& b, int var_idx,
                                 int nsymbols) {
    PolyMap rm = to_map(a);
    const PolyMap bm = to_map(b);
    const int db = map_degree(bm, var_idx);
    if (db < 0) throw DomainError("poly_pseudo_remainder: zero divisor");
    const PolyMap lead_b = map_coefficient(bm, var_idx, db);
    (void)nsymbols;
    int da = map_degree(rm, var_idx);
    while (da >= db && !rm.empty()) {
        PolyMap lead_a = map_coefficient(rm, var_idx, da);
        // Shift lead_a by var^(da-db).
        PolyMap shifted;
        for (auto& [e, c] : lead_a) {
            std::vector<int> e2 = e;
            e2[var_idx] += da - db;
            shifted.emplace(std::move(e2), c);
        }
        rm = map_add(map_mul(rm, lead_b), map_mul(shifted, bm), Rational(-1));
        da = map_degree(rm, var_idx);
    }
    return from_map(rm);
}

}  // namespace surfenum
