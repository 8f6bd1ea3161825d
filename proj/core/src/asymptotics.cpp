#include "surfenum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "surfenum/gf_systems.hpp"

namespace surfenum {

namespace {

// mpq_class(num, den) does not canonicalize; always go through this helper
// for two-argument construction.
Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

AlgebraicCurve curve_from_system(const PolynomialSystem& system) {
    if (system.unknowns.size() != 1 || system.vars.size() != 1 || system.equations.size() != 1)
        throw DomainError("curve_from_system: need exactly one unknown, one variable, one equation");
    AlgebraicCurve curve;
    curve.symbols = {system.unknowns[0], system.vars[0]};
    curve.poly = system.equations[0];
    if (curve_degree_F(curve) < 1)
        throw DomainError("curve_from_system: equation does not involve the unknown");
    // Squarefree in F <=> disc_F(P) is not the zero polynomial.
    if (curve_discriminant(curve).is_zero())
        throw CertificationError("curve_from_system: curve is not squarefree in F");
    return curve;
}

int curve_degree_F(const AlgebraicCurve& curve) {
    int d = 0;
    for (const auto& t : curve.poly.terms) d = std::max(d, t.exps[AlgebraicCurve::kF]);
    return d;
}

ZPoly curve_coefficient(const AlgebraicCurve& curve, int k) {
    Polynomial slice;
    for (const auto& t : curve.poly.terms)
        if (t.exps[AlgebraicCurve::kF] == k) {
            Polynomial::Term copy = t;
            copy.exps[AlgebraicCurve::kF] = 0;
            slice.terms.push_back(copy);
        }
    return zpoly_from_polynomial(slice, AlgebraicCurve::kVar, 2);
}

namespace {

// --- bivariate resultants by evaluation/interpolation -----------------------
// The registry curves have F-degree up to 9; the Sylvester determinant is too
// large for naive expansion, so Res is computed by evaluating the kept
// variable at integer points, taking univariate resultants over Q, and
// interpolating.

using QP = std::vector<Rational>;  // univariate, q[i] x^i

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Evaluate the coefficient polynomials of `p` (viewed in symbol elim_idx)
// at keep_symbol = t.
QP qp_at(const Polynomial& p, int elim_idx, int keep_idx, const Rational& t) {
    QP out;
    for (const auto& term : p.terms) {
        int e = term.exps[elim_idx];
        if (static_cast<int>(out.size()) <= e) out.resize(e + 1, Rational(0));
        Rational v = term.coeff;
        for (int k = 0; k < term.exps[keep_idx]; ++k) v *= t;
        out[e] += v;
    }
    qp_trim(out);
    return out;
}

// res(A, B) over Q via the Euclidean recursion:
// res(A, B) = (-1)^{dA dB} lc(B)^{dA - dR} res(B, R) with R = A mod B.
Rational qp_resultant(QP a, QP b) {
    qp_trim(a);
    qp_trim(b);
    Rational acc(1);
    while (true) {
        if (a.empty() || b.empty()) return Rational(0);
        if (a.size() < b.size()) {
            std::swap(a, b);
            if (((a.size() - 1) * (b.size() - 1)) % 2 == 1) acc = -acc;
        }
        if (b.empty()) return Rational(0);
        if (b.size() == 1) {
            Rational lc = b[0];
            Rational p(1);
            for (size_t k = 1; k < a.size(); ++k) p *= lc;
            return acc * p;
        }
        size_t da = a.size() - 1, db = b.size() - 1;
        QP r = a;
        while (r.size() >= b.size() && !r.empty()) {
            Rational f = r.back() / b.back();
            size_t shift = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
            r.pop_back();
            qp_trim(r);
        }
        size_t dr = r.empty() ? 0 : r.size() - 1;
        if ((da * db) % 2 == 1) acc = -acc;
        Rational lcpow(1);
        for (size_t k = 0; k < da - dr; ++k) lcpow *= b.back();
        acc *= lcpow;
        a = std::move(b);
        b = std::move(r);
    }
}

int degree_in(const Polynomial& p, int idx) {
    int d = 0;
    for (const auto& t : p.terms) d = std::max(d, t.exps[idx]);
    return d;
}

// Res_{elim}(p, q) as an integer polynomial in the kept symbol.
ZPoly bivariate_resultant(const Polynomial& p, const Polynomial& q, int elim_idx,
                          int keep_idx) {
    int bound = degree_in(p, keep_idx) * degree_in(q, elim_idx) +
                degree_in(q, keep_idx) * degree_in(p, elim_idx);
    size_t need = static_cast<size_t>(bound) + 1;
    size_t dp = static_cast<size_t>(degree_in(p, elim_idx));
    size_t dq = static_cast<size_t>(degree_in(q, elim_idx));
    std::vector<std::pair<Rational, Rational>> samples;  // (t, res value)
    // Walk 0, 1, -1, 2, -2, ...; skip points where either leading coefficient
    // vanishes (there the resultant of the evaluations is not the evaluation
    // of the resultant).
    for (long step = 0; samples.size() < need; ++step) {
        if (step > 8 * bound + 64)
            throw InternalError("bivariate_resultant: could not collect sample points");
        long t = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        QP pa = qp_at(p, elim_idx, keep_idx, Rational(t));
        QP qa = qp_at(q, elim_idx, keep_idx, Rational(t));
        if (pa.size() != dp + 1 || qa.size() != dq + 1) continue;  // degree drop
        samples.emplace_back(Rational(t), qp_resultant(pa, qa));
    }
    // Lagrange interpolation (Newton form) through the samples.
    std::vector<Rational> divided(need);
    std::vector<Rational> xs(need);
    for (size_t i = 0; i < need; ++i) {
        xs[i] = samples[i].first;
        divided[i] = samples[i].second;
    }
    for (size_t level = 1; level < need; ++level)
        for (size_t i = need - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
    // Expand the Newton form into monomial coefficients.
    QP poly{divided[need - 1]};
    for (size_t i = need - 1; i-- > 0;) {
        // poly = poly * (x - xs[i]) + divided[i]
        QP next(poly.size() + 1, Rational(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += divided[i];
        poly = std::move(next);
        qp_trim(poly);
    }
    Polynomial out;
    for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        Polynomial::Term t;
        t.coeff = poly[k];
        t.exps = {0, 0};
        t.exps[keep_idx] = static_cast<int>(k);
        out.terms.push_back(t);
    }
    if (out.terms.empty()) return ZPoly{};
    return zpoly_from_polynomial(out, keep_idx, 2);
}

}  // namespace

ZPoly curve_discriminant(const AlgebraicCurve& curve) {
    Polynomial dF = differentiate_polynomial(curve.poly, AlgebraicCurve::kF);
    return zpoly_primitive(bivariate_resultant(curve.poly, dF, AlgebraicCurve::kF,
                                               AlgebraicCurve::kVar));
}

namespace {

// Distinct positive roots of disc_F(P) and the leading F-coefficient,
// sorted increasingly, overlapping enclosures merged.
std::vector<Interval> singularity_candidates(const AlgebraicCurve& curve, int bits) {
    std::vector<Interval> cands = positive_real_roots(curve_discriminant(curve), bits);
    ZPoly lead = curve_coefficient(curve, curve_degree_F(curve));
    if (lead.degree() >= 1)
        for (auto& r : positive_real_roots(lead, bits)) cands.push_back(r);
    std::sort(cands.begin(), cands.end(),
              [](const Interval& a, const Interval& b) { return a.midpoint() < b.midpoint(); });
    std::vector<Interval> merged;
    for (const auto& c : cands) {
        if (!merged.empty() && merged.back().upper_rational() >= c.lower_rational())
            merged.back() = Interval::hull(merged.back(), c);
        else
            merged.push_back(c);
    }
    return merged;
}

// Radius-of-convergence estimate from trailing coefficient ratios of the
// exact branch prefix: with a_m, a_{m-s} the last two nonzero coefficients,
// (a_{m-s}/a_m)^{1/s} -> rho as m grows.
double branch_radius_estimate(const TruncatedSeries& branch) {
    std::vector<int> support;
    for (int k = 1; k <= branch.truncation(); ++k)
        if (branch.coeff1(k) != 0) support.push_back(k);
    if (support.size() < 2)
        throw CertificationError(
            "dominant_singularity: branch prefix too short for a radius estimate");
    int m = support.back();
    int s = m - support[support.size() - 2];
    Rational ratio = abs(branch.coeff1(m - s)) / abs(branch.coeff1(m));
    return std::pow(ratio.get_d(), 1.0 / s);
}

}  // namespace

Interval dominant_singularity(const AlgebraicCurve& curve, const TruncatedSeries& branch,
                              int bits) {
    std::vector<Interval> cands = singularity_candidates(curve, bits);
    if (cands.empty())
        throw CertificationError("dominant_singularity: no positive real singularity candidates");
    double r_est = branch_radius_estimate(branch);
    // Trailing ratios converge like 1 + O(1/m); a factor-1.7 window separates
    // the true radius from the other candidates at desk-scale orders.
    const double tol = std::log(1.7);
    for (const auto& c : cands)
        if (std::abs(std::log(c.midpoint()) - std::log(r_est)) < tol) return c;
    throw CertificationError(
        "dominant_singularity: no candidate is consistent with the branch radius");
}

// ---------------------------------------------------------------------------
// Puiseux expansion via the degenerate-critical-point ladder
// ---------------------------------------------------------------------------

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// t-truncated interval series: s[k] is the coefficient of t^k.
using TSeries = std::vector<Interval>;

TSeries t_zero(int len) { return TSeries(static_cast<size_t>(len), Interval(Rational(0))); }

TSeries t_mul(const TSeries& a, const TSeries& b) {
    TSeries r = t_zero(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].contains_zero() && a[i].width() == 0) continue;
        for (size_t j = 0; i + j < r.size() && j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

// G(X, W) = P(rho(1 - X), a0 + W) as an interval coefficient table
// g[m][k] of X^m W^k.
std::vector<std::vector<Interval>> critical_table(const AlgebraicCurve& curve,
                                                  const Interval& rho, const Interval& a0) {
    int dv = 0, df = 0;
    for (const auto& t : curve.poly.terms) {
        dv = std::max(dv, t.exps[AlgebraicCurve::kVar]);
        df = std::max(df, t.exps[AlgebraicCurve::kF]);
    }
    std::vector<std::vector<Interval>> g(dv + 1, std::vector<Interval>(df + 1, Interval(Rational(0))));
    // Precompute powers.
    std::vector<Interval> rho_pow(dv + 1, Interval(Rational(1)));
    for (int j = 1; j <= dv; ++j) rho_pow[j] = rho_pow[j - 1] * rho;
    std::vector<Interval> a0_pow(df + 1, Interval(Rational(1)));
    for (int j = 1; j <= df; ++j) a0_pow[j] = a0_pow[j - 1] * a0;
    for (const auto& t : curve.poly.terms) {
        int j = t.exps[AlgebraicCurve::kVar];
        int i = t.exps[AlgebraicCurve::kF];
        Interval base = Interval(t.coeff) * rho_pow[j];
        // var^j = rho^j sum_m C(j,m) (-1)^m X^m ; F^i = sum_k C(i,k) a0^{i-k} W^k
        for (int m = 0; m <= j; ++m) {
            Rational cm{binomial(j, m)};
            if (m % 2 == 1) cm = -cm;
            for (int k = 0; k <= i; ++k) {
                Interval contrib = base * Interval(cm) * Interval(Rational(binomial(i, k))) *
                                   a0_pow[i - k];
                g[m][k] = g[m][k] + contrib;
            }
        }
    }
    return g;
}

// Residual of G(t^2, W(t)) as a t-series up to t^{len-1}, W given by
// coefficients w[r] of t^r (w[0] = w[1] = 0).
TSeries ladder_residual(const std::vector<std::vector<Interval>>& g, const TSeries& w, int len) {
    TSeries res = t_zero(len);
    int dv = static_cast<int>(g.size()) - 1;
    int df = static_cast<int>(g[0].size()) - 1;
    // W powers.
    std::vector<TSeries> wpow(df + 1, t_zero(len));
    wpow[0][0] = Interval(Rational(1));
    for (int k = 1; k <= df; ++k) wpow[k] = t_mul(wpow[k - 1], w);
    for (int m = 0; m <= dv; ++m)
        for (int k = 0; k <= df; ++k) {
            const Interval& c = g[m][k];
            if (c.width() == 0 && c.contains_zero()) continue;
            for (int o = 2 * m; o < len; ++o) {
                const Interval& wc = wpow[k][o - 2 * m];
                if (wc.width() == 0 && wc.contains_zero()) continue;
                res[o] = res[o] + c * wc;
            }
        }
    return res;
}

// Locate the branch value a0 = lim F(var) as var -> rho^- : a root of
// Res_var(P, P_F) selected by the exact partial-sum estimate of the branch.
Interval branch_critical_value(const AlgebraicCurve& curve, const Interval& rho,
                               const TruncatedSeries& branch, int bits) {
    Polynomial dF = differentiate_polynomial(curve.poly, AlgebraicCurve::kF);
    // Eliminate the variable: the critical values of F are among the roots.
    ZPoly rf = bivariate_resultant(curve.poly, dF, AlgebraicCurve::kVar, AlgebraicCurve::kF);
    std::vector<Interval> roots = positive_real_roots(rf, bits);
    if (roots.empty())
        throw CertificationError("puiseux_expand: no positive critical value candidates");
    // Partial sum of the exact prefix at the midpoint of rho.
    Rational mid = (rho.lower_rational() + rho.upper_rational()) / 2;
    Rational est(0);
    for (int k = branch.truncation(); k >= 0; --k) est = est * mid + branch.coeff1(k);
    double e = est.get_d();
    const Interval* best = nullptr;
    double best_d = 0;
    for (const auto& r : roots) {
        double d = std::abs(r.midpoint() - e);
        if (!best || d < best_d) {
            best = &r;
            best_d = d;
        }
    }
    return *best;
}

Interval eval_bivariate(const Polynomial& p, const Interval& v, const Interval& f) {
    Interval acc{Rational(0)};
    for (const auto& t : p.terms)
        acc = acc + Interval(t.coeff) * v.pow_int(t.exps[AlgebraicCurve::kVar]) *
                        f.pow_int(t.exps[AlgebraicCurve::kF]);
    return acc;
}

}  // namespace

SingularExpansion puiseux_expand(const AlgebraicCurve& curve, const Interval& rho,
                                 const TruncatedSeries& branch, int depth) {
    if (depth < 3) throw DomainError("puiseux_expand: depth must be at least 3");
    Interval a0 = branch_critical_value(curve, rho, branch, 220);
    // Certify the selected point: P and P_F must both enclose zero there.
    if (!eval_bivariate(curve.poly, rho, a0).contains_zero())
        throw CertificationError("puiseux_expand: critical value does not satisfy P = 0");
    Polynomial dF = differentiate_polynomial(curve.poly, AlgebraicCurve::kF);
    if (!eval_bivariate(dF, rho, a0).contains_zero())
        throw CertificationError("puiseux_expand: critical value does not satisfy P_F = 0");

    auto g = critical_table(curve, rho, a0);
    // Structure checks for the fully-degenerate cusp: G, G_W, G_X all vanish
    // and G_WW is invertible.
    if (!g[0][0].contains_zero() || !g[0][1].contains_zero())
        throw CertificationError("puiseux_expand: expansion point is not a critical point");
    if (!g[1][0].contains_zero())
        throw CertificationError(
            "puiseux_expand: P_var does not vanish; square-root branch point needs the X^{1/2} "
            "grid");
    if (g[0][2].contains_zero())
        throw CertificationError("puiseux_expand: G_WW is not certifiably nonzero");
    // Double-root condition for the X^1 coefficient.
    Interval disc = g[1][1] * g[1][1] - Interval(Rational(4)) * g[2][0] * g[0][2];
    if (!disc.contains_zero())
        throw CertificationError("puiseux_expand: X-coefficient quadratic has distinct roots; "
                                 "the X^{1/2} grid would be required");

    const int len = depth + 5;
    TSeries w = t_zero(len);
    // w2 = -g11 / (2 g02): the double root.
    w[2] = -g[1][1] / (Interval(Rational(2)) * g[0][2]);
    // w3^2 = -[t^6] residual(w2 t^2) / g02.
    TSeries res = ladder_residual(g, w, len);
    Interval w3sq = -res[6] / g[0][2];
    if (!w3sq.is_positive())
        throw CertificationError("puiseux_expand: X^{3/2} coefficient square is not certifiably "
                                 "positive");
    // The combinatorial branch has nonnegative coefficients, and
    // Gamma(-3/2) > 0, so the X^{3/2} coefficient is the positive root.
    w[3] = w3sq.sqrt();
    Interval pivot = Interval(Rational(2)) * g[0][2] * w[3];
    for (int K = 4; K <= depth; ++K) {
        res = ladder_residual(g, w, len);
        w[K] = -res[K + 3] / pivot;
    }

    SingularExpansion e;
    e.rho = rho;
    e.terms.push_back({a0, Rational(0), false});
    for (int k = 2; k <= depth; ++k) e.terms.push_back({w[k], make_rational(k, 2), false});
    e.error_exponent = make_rational(depth + 1, 2);
    return e;
}

Interval expansion_coefficient(const SingularExpansion& e, const Rational& exponent) {
    for (const auto& t : e.terms)
        if (!t.log_factor && t.exponent == exponent) return t.coeff;
    return Interval(Rational(0));
}

Interval expansion_eval(const SingularExpansion& e, const Interval& x) {
    Interval acc{Rational(0)};
    for (const auto& t : e.terms) {
        Interval term = t.coeff * x.pow_rational(t.exponent);
        if (t.log_factor) term = term * x.log();
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Expansion arithmetic
// ---------------------------------------------------------------------------

namespace {

void check_same_rho(const SingularExpansion& a, const SingularExpansion& b) {
    Rational mid_a = (a.rho.lower_rational() + a.rho.upper_rational()) / 2;
    Rational mid_b = (b.rho.lower_rational() + b.rho.upper_rational()) / 2;
    if (!a.rho.contains(mid_b) || !b.rho.contains(mid_a))
        throw DomainError("expansion arithmetic: operands have different singularities");
}

using TermKey = std::pair<Rational, bool>;  // (exponent, log flag)

SingularExpansion from_map(const Interval& rho, const std::map<TermKey, Interval>& m,
                           const Rational& err) {
    SingularExpansion r;
    r.rho = rho;
    r.error_exponent = err;
    for (const auto& [key, coeff] : m) {
        if (key.first >= err) continue;
        if (coeff.width() == 0 && coeff.contains_zero()) continue;
        r.terms.push_back({coeff, key.first, key.second});
    }
    return r;
}

std::map<TermKey, Interval> to_map(const SingularExpansion& e) {
    std::map<TermKey, Interval> m;
    for (const auto& t : e.terms) {
        TermKey key{t.exponent, t.log_factor};
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(key, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    return m;
}

Rational min_exponent(const SingularExpansion& e) {
    Rational m = e.error_exponent;
    for (const auto& t : e.terms) m = std::min(m, t.exponent);
    return m;
}

}  // namespace

SingularExpansion expansion_add(const SingularExpansion& a, const SingularExpansion& b) {
    check_same_rho(a, b);
    auto m = to_map(a);
    for (const auto& t : b.terms) {
        TermKey key{t.exponent, t.log_factor};
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(key, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    return from_map(a.rho, m, std::min(a.error_exponent, b.error_exponent));
}

SingularExpansion expansion_multiply(const SingularExpansion& a, const SingularExpansion& b) {
    check_same_rho(a, b);
    Rational err = std::min(a.error_exponent + min_exponent(b),
                            b.error_exponent + min_exponent(a));
    std::map<TermKey, Interval> m;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            if (ta.log_factor && tb.log_factor)
                throw DomainError("expansion_multiply: product of two log terms is unsupported");
            TermKey key{ta.exponent + tb.exponent, ta.log_factor || tb.log_factor};
            Interval c = ta.coeff * tb.coeff;
            auto it = m.find(key);
            if (it == m.end())
                m.emplace(key, c);
            else
                it->second = it->second + c;
        }
    return from_map(a.rho, m, err);
}

SingularExpansion expansion_scale(const SingularExpansion& a, const Interval& c) {
    SingularExpansion r = a;
    for (auto& t : r.terms) t.coeff = t.coeff * c;
    return r;
}

SingularExpansion expansion_differentiate(const SingularExpansion& a) {
    // d/dvar = -(1/rho) d/dX.
    Interval minus_inv_rho = -(Interval(Rational(1)) / a.rho);
    std::map<TermKey, Interval> m;
    auto add = [&m](const TermKey& key, const Interval& c) {
        auto it = m.find(key);
        if (it == m.end())
            m.emplace(key, c);
        else
            it->second = it->second + c;
    };
    for (const auto& t : a.terms) {
        if (!t.log_factor) {
            if (t.exponent == 0) continue;  // constants vanish
            add({t.exponent - 1, false}, minus_inv_rho * Interval(t.exponent) * t.coeff);
        } else {
            // d/dX (X^e log X) = e X^{e-1} log X + X^{e-1}
            if (t.exponent != 0)
                add({t.exponent - 1, true}, minus_inv_rho * Interval(t.exponent) * t.coeff);
            add({t.exponent - 1, false}, minus_inv_rho * t.coeff);
        }
    }
    return from_map(a.rho, m, a.error_exponent - 1);
}

SingularExpansion expansion_integrate(const SingularExpansion& a) {
    // integral dvar = -rho integral dX, constant of integration zero.
    std::map<TermKey, Interval> m;
    for (const auto& t : a.terms) {
        if (t.log_factor)
            throw DomainError("expansion_integrate: log terms are unsupported");
        if (t.exponent == Rational(-1)) {
            // -rho * integral X^{-1} dX = -rho log X
            m.emplace(TermKey{Rational(0), true}, -(a.rho * t.coeff));
        } else {
            Interval c = -(a.rho * t.coeff) / Interval(t.exponent + 1);
            m.emplace(TermKey{t.exponent + 1, false}, c);
        }
    }
    return from_map(a.rho, m, a.error_exponent + 1);
}

SingularExpansion expansion_sqrt(const SingularExpansion& a) {
    Interval a0 = expansion_coefficient(a, Rational(0));
    if (!a0.is_positive())
        throw DomainError("expansion_sqrt: constant term must be certifiably positive");
    // u = a/a0 - 1 has positive minimal exponent; sqrt(a) = sqrt(a0) *
    // sum_j C(1/2, j) u^j with the binomial tail beyond the error order
    // dropped (it only involves exponents >= error_exponent).
    SingularExpansion u = expansion_scale(a, Interval(Rational(1)) / a0);
    {
        std::map<TermKey, Interval> m = to_map(u);
        auto it = m.find(TermKey{Rational(0), false});
        if (it != m.end()) m.erase(it);
        u = from_map(a.rho, m, a.error_exponent);
    }
    for (const auto& t : u.terms)
        if (t.log_factor || t.exponent <= 0)
            throw DomainError("expansion_sqrt: operand must be a0 (1 + smaller-order terms)");
    Rational mu = min_exponent(u);
    int jmax = 1;
    while (Rational(jmax) * mu < a.error_exponent) ++jmax;
    SingularExpansion acc;
    acc.rho = a.rho;
    acc.error_exponent = a.error_exponent;
    acc.terms.push_back({Interval(Rational(1)), Rational(0), false});
    SingularExpansion upow = acc;  // u^0 = 1
    Rational coeff(1);
    for (int j = 1; j <= jmax; ++j) {
        upow = expansion_multiply(upow, u);
        upow.error_exponent = a.error_exponent;  // keep full working order
        coeff *= make_rational(3 - 2 * j, 2 * j);     // C(1/2,j) = C(1/2,j-1)*(1/2-j+1)/j
        acc = expansion_add(acc, expansion_scale(upow, Interval(coeff)));
        acc.error_exponent = a.error_exponent;
    }
    return expansion_scale(acc, a0.sqrt());
}

// ---------------------------------------------------------------------------
// Transfer
// ---------------------------------------------------------------------------

Interval gamma_half_integer(const Rational& x) {
    Integer den = x.get_den();
    if (den == 1) {
        if (x <= 0) throw DomainError("gamma_half_integer: pole at non-positive integer");
        Interval r{Rational(1)};
        for (Rational k(1); k < x; k += 1) r = r * Interval(k);
        return r;
    }
    if (den != 2) throw DomainError("gamma_half_integer: argument must be on the half grid");
    Interval g = Interval::pi().sqrt();  // Gamma(1/2)
    Rational arg(1, 2);
    while (arg < x) {
        g = g * Interval(arg);
        arg += 1;
    }
    while (arg > x) {
        arg -= 1;
        g = g / Interval(arg);
    }
    return g;
}

CoefficientAsymptotic transfer(const SingularExpansion& e, int stride) {
    const SingularTerm* lead = nullptr;
    for (const auto& t : e.terms) {
        bool singular = t.log_factor || t.exponent.get_den() != 1;
        if (!singular) continue;
        if (!lead || t.exponent < lead->exponent) lead = &t;
    }
    if (!lead) throw CertificationError("transfer: no singular part");
    CoefficientAsymptotic a;
    a.rho = e.rho;
    a.stride = stride;
    if (lead->log_factor) {
        // c log(1 - var/rho): [var^n] = -c/n * rho^{-n}.
        a.log_case = true;
        a.power = Rational(-1);
        a.constant = -lead->coeff;
    } else {
        // c (1 - var/rho)^e: [var^n] ~ c / Gamma(-e) * n^{-e-1} rho^{-n}.
        a.log_case = false;
        a.power = -lead->exponent - 1;
        a.constant = lead->coeff / gamma_half_integer(-lead->exponent);
    }
    return a;
}

Interval transfer_estimate(const CoefficientAsymptotic& a, long n) {
    if (n <= 0) throw DomainError("transfer_estimate: n must be positive");
    if (a.stride > 1 && n % a.stride != 0) return Interval(Rational(0));
    Interval nn{Rational(n)};
    return a.constant * Interval(Rational(a.stride)) * nn.pow_rational(a.power) *
           a.rho.pow_int(-n);
}

// ---------------------------------------------------------------------------
// Growth fitting
// ---------------------------------------------------------------------------

GrowthFit fit_growth(const std::vector<Rational>& coeffs, int stride) {
    std::vector<std::pair<long, double>> pts;  // (n, log |a_n|)
    for (size_t n = 1; n < coeffs.size(); ++n) {
        if (coeffs[n] == 0) continue;
        if (stride > 1 && n % static_cast<size_t>(stride) != 0)
            throw DomainError("fit_growth: nonzero coefficient off the stride lattice");
        // log |a_n| computed exactly from numerator/denominator bit sizes.
        Rational a = abs(coeffs[n]);
        double l = std::log(mpz_get_d(a.get_num().get_mpz_t())) -
                   std::log(mpz_get_d(a.get_den().get_mpz_t()));
        // Fall back to sizeinbase for values overflowing double.
        if (!std::isfinite(l)) {
            auto approx_log = [](const Integer& z) {
                size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
                // log(z) = log(mantissa) + (bits - 53) log 2 for large z.
                if (bits <= 900) return std::log(mpz_get_d(z.get_mpz_t()));
                Integer shifted = z >> static_cast<unsigned long>(bits - 53);
                return std::log(mpz_get_d(shifted.get_mpz_t())) +
                       static_cast<double>(bits - 53) * std::log(2.0);
            };
            l = approx_log(a.get_num()) - approx_log(a.get_den());
        }
        pts.emplace_back(static_cast<long>(n), l);
    }
    if (pts.size() < 12)
        throw CertificationError("fit_growth: need at least 12 nonzero coefficients");
    size_t window = std::min<size_t>(pts.size(), 24);
    pts.erase(pts.begin(), pts.end() - static_cast<long>(window));
    // Model: l = c + e log n - L n + d/n ; least squares in (c, e, L, d).
    // The d/n column absorbs the leading subpolynomial correction, which
    // otherwise leaks an O(1/n) bias into the fitted exponent.
    constexpr int kPar = 4;
    long double S[kPar][kPar] = {};
    long double rhs[kPar] = {};
    for (const auto& [n, l] : pts) {
        long double row[kPar] = {1.0L, std::log(static_cast<long double>(n)),
                                 -static_cast<long double>(n),
                                 1.0L / static_cast<long double>(n)};
        for (int i = 0; i < kPar; ++i) {
            for (int j = 0; j < kPar; ++j) S[i][j] += row[i] * row[j];
            rhs[i] += row[i] * static_cast<long double>(l);
        }
    }
    // Gauss-Jordan with partial pivoting on the normal equations. Row
    // swaps permute equations, not unknowns, so x[i] = rhs[i]/S[i][i] after
    // elimination.
    for (int col = 0; col < kPar; ++col) {
        int piv = col;
        for (int r = col + 1; r < kPar; ++r)
            if (std::abs(static_cast<double>(S[r][col])) >
                std::abs(static_cast<double>(S[piv][col])))
                piv = r;
        std::swap(S[col], S[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = 0; r < kPar; ++r) {
            if (r == col) continue;
            long double f = S[r][col] / S[col][col];
            for (int c2 = 0; c2 < kPar; ++c2) S[r][c2] -= f * S[col][c2];
            rhs[r] -= f * rhs[col];
        }
    }
    // With row[2] = -n the unknown x2 satisfies -n x2 = -n log rho, so
    // x2 = log rho directly.
    long double e = rhs[1] / S[1][1];
    long double L = rhs[2] / S[2][2];
    GrowthFit fit;
    fit.exponent = static_cast<double>(e);
    fit.rho = std::exp(static_cast<double>(L));
    return fit;
}

Interval growth_constant(const Interval& rho) {
    if (!rho.is_positive()) throw DomainError("growth_constant: rho must be positive");
    return (Interval(Rational(1)) / rho).sqrt();
}

// ---------------------------------------------------------------------------
// Standard constants
// ---------------------------------------------------------------------------

namespace {

Interval smallest_positive_root_of_system(const std::string& name, int bits) {
    const NamedSystem& ns = get_system(name);
    ZPoly p = zpoly_from_polynomial(ns.system.equations.at(0), 0, 2);
    std::vector<Interval> roots = positive_real_roots(p, bits);
    if (roots.empty())
        throw CertificationError("no positive real root for system " + name);
    return roots.front();
}

}  // namespace

std::vector<ConstantReport> standard_constants() {
    const int bits = 200;
    std::vector<ConstantReport> out;
    AlgebraicCurve s0 = curve_from_system(get_system("s0_quartic").system);
    Interval rho_s = dominant_singularity(s0, solve_S0(48), bits);
    out.push_back({"rho_S", "3/2^(8/3)", rho_s});
    AlgebraicCurve shat0 = curve_from_system(get_system("shat0_cubic").system);
    out.push_back({"rho_Shat", "2^(1/3)/3", dominant_singularity(shat0, solve_Shat0(48), bits)});
    AlgebraicCurve nc = curve_from_system(get_system("n_sextic").system);
    out.push_back({"rho_N", "432/4913", dominant_singularity(nc, solve_network(32), bits)});
    AlgebraicCurve ac = curve_from_system(get_system("a_octic").system);
    // The registry unknown is Abar = 1 + A; the shift does not move the radius.
    Interval rho_q = dominant_singularity(
        ac, TruncatedSeries::constant({"v"}, 0, 28, Rational(1)) + solve_Q(28).A, bits);
    out.push_back({"rho_Q", "54/79^(3/2)", rho_q});
    out.push_back({"rho_D", "27/256", rho_s.pow_int(3)});
    Interval rho1 = smallest_positive_root_of_system("rho1_sextic", bits);
    out.push_back({"gamma_1", "root of the genus-1 sextic, ^(-1/2)", growth_constant(rho1)});
    out.push_back({"gamma_2", "79^(3/4)/54^(1/2)", growth_constant(rho_q)});
    Interval rho3 = smallest_positive_root_of_system("rho3_sextic", bits);
    out.push_back({"gamma_3", "root of the genus-3 sextic, ^(-1/2)", growth_constant(rho3)});
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string constants_report_json(const std::vector<ConstantReport>& reports, int digits) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        Interval lo_pt(r.value.lower_rational());
        Interval hi_pt(r.value.upper_rational());
        os << "  {\"name\": \"" << json_escape(r.name) << "\", \"closed_form\": \""
           << json_escape(r.closed_form) << "\", \"interval\": [" << lo_pt.to_string(digits)
           << ", " << hi_pt.to_string(digits) << "], \"digits\": " << digits << "}";
        if (i + 1 < reports.size()) os << ",";
        os << "\n";
    }
    os << "]\n";
    return os.str();
}

}  // namespace surfenum
