#include "surfenum/zpoly.hpp"

#include <algorithm>

namespace surfenum {

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly zpoly_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t i = 1; i < p.c.size(); ++i) d.c.push_back(p.c[i] * static_cast<long>(i));
    d.normalize();
    return d;
}

ZPoly zpoly_primitive(const ZPoly& p) {
    if (p.is_zero()) return p;
    Integer g = 0;
    for (const auto& ci : p.c) g = gcd(g, ci);
    ZPoly r = p;
    if (g != 0)
        for (auto& ci : r.c) ci /= g;
    if (r.c.back() < 0)
        for (auto& ci : r.c) ci = -ci;
    return r;
}

namespace {

// Rational-coefficient helpers used only inside gcd computations.
using QPoly = std::vector<Rational>;  // q[i] * x^i

QPoly to_q(const ZPoly& p) {
    QPoly q;
    q.reserve(p.c.size());
    for (const auto& ci : p.c) q.emplace_back(ci);
    return q;
}

void q_normalize(QPoly& q) {
    while (!q.empty() && q.back() == 0) q.pop_back();
}

// Remainder of a by b over Q (b nonzero).
QPoly q_rem(QPoly a, const QPoly& b) {
    q_normalize(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        q_normalize(a);
    }
    return a;
}

// Clear denominators and strip integer content. Scaling is by a positive
// constant, so the sign pattern is preserved everywhere.
ZPoly q_to_z_scaled(const QPoly& q) {
    Integer den = 1;
    for (const auto& qi : q) den = lcm(den, qi.get_den());
    ZPoly z;
    z.c.reserve(q.size());
    for (const auto& qi : q) {
        Rational scaled = qi * Rational(den);
        z.c.push_back(scaled.get_num());
    }
    z.normalize();
    if (z.is_zero()) return z;
    Integer g = 0;
    for (const auto& ci : z.c) g = gcd(g, ci);
    if (g > 1)
        for (auto& ci : z.c) ci /= g;
    return z;
}

ZPoly q_to_primitive_z(const QPoly& q) {
    ZPoly z = q_to_z_scaled(q);
    if (!z.is_zero() && z.c.back() < 0)
        for (auto& ci : z.c) ci = -ci;
    return z;
}

ZPoly z_gcd(ZPoly a, ZPoly b) {
    QPoly qa = to_q(a), qb = to_q(b);
    q_normalize(qa);
    q_normalize(qb);
    while (!qb.empty()) {
        QPoly r = q_rem(qa, qb);
        qa = std::move(qb);
        qb = std::move(r);
    }
    return q_to_primitive_z(qa);
}

// Exact division over Q of p by d (must divide evenly).
ZPoly z_divexact(const ZPoly& p, const ZPoly& d) {
    QPoly qp = to_q(p);
    QPoly qd = to_q(d);
    q_normalize(qp);
    q_normalize(qd);
    if (qd.empty()) throw DomainError("zpoly: division by zero polynomial");
    QPoly quot(qp.size() >= qd.size() ? qp.size() - qd.size() + 1 : 0, Rational(0));
    while (qp.size() >= qd.size() && !qp.empty()) {
        Rational f = qp.back() / qd.back();
        size_t shift = qp.size() - qd.size();
        quot[shift] = f;
        for (size_t i = 0; i < qd.size(); ++i) qp[shift + i] -= f * qd[i];
        q_normalize(qp);
    }
    if (!qp.empty()) throw InternalError("zpoly: inexact division in squarefree part");
    return q_to_primitive_z(quot);
}

}  // namespace

ZPoly zpoly_squarefree(const ZPoly& p) {
    if (p.is_zero() || p.degree() < 1) return zpoly_primitive(p);
    ZPoly g = z_gcd(p, zpoly_derivative(p));
    if (g.degree() < 1) return zpoly_primitive(p);
    return z_divexact(zpoly_primitive(p), g);
}

Rational zpoly_eval(const ZPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int zpoly_sign_at(const ZPoly& p, const Rational& x) {
    return sgn(zpoly_eval(p, x));
}

Interval zpoly_eval(const ZPoly& p, const Interval& x) {
    Interval acc{Rational(0)};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        acc = acc * x + Interval(Rational(*it));
    return acc;
}

ZPoly zpoly_from_polynomial(const Polynomial& p, int var_idx, int nsymbols) {
    Integer den = 1;
    for (const auto& t : p.terms) den = lcm(den, t.coeff.get_den());
    ZPoly z;
    for (const auto& t : p.terms) {
        if (static_cast<int>(t.exps.size()) != nsymbols)
            throw DomainError("zpoly_from_polynomial: symbol count mismatch");
        for (int i = 0; i < nsymbols; ++i)
            if (i != var_idx && t.exps[i] != 0)
                throw DomainError("zpoly_from_polynomial: polynomial is not univariate");
        int e = t.exps[var_idx];
        if (static_cast<int>(z.c.size()) <= e) z.c.resize(e + 1, Integer(0));
        Rational scaled = t.coeff * Rational(den);
        z.c[e] += scaled.get_num();
    }
    z.normalize();
    return z;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p) {
    std::vector<ZPoly> chain;
    chain.push_back(zpoly_primitive(p));
    chain.push_back(zpoly_primitive(zpoly_derivative(p)));
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        if (b.degree() < 1) break;
        QPoly r = q_rem(to_q(a), to_q(b));
        for (auto& x : r) x = -x;
        ZPoly zr = q_to_z_scaled(r);
        if (zr.is_zero()) break;
        chain.push_back(zr);
    }
    return chain;
}

int sturm_variations(const std::vector<ZPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = zpoly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

namespace {

Rational cauchy_bound(const ZPoly& p) {
    // 1 + max |c_i| / |lead|
    Rational lead{abs(p.c.back())};
    Rational best(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rational v = Rational(abs(p.c[i])) / lead;
        if (v > best) best = v;
    }
    return best + 1;
}

void isolate_rec(const std::vector<ZPoly>& chain, const ZPoly& p, const Rational& lo,
                 const Rational& hi, int nroots,
                 std::vector<std::pair<Rational, Rational>>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (zpoly_sign_at(p, mid) == 0) {
        out.emplace_back(mid, mid);
        // Shrink around the exact root so the halves exclude it.
        Rational eps = (hi - lo) / 1024;
        Rational l2 = mid - eps, r2 = mid + eps;
        while (zpoly_sign_at(p, l2) == 0) l2 = (lo + l2) / 2;
        while (zpoly_sign_at(p, r2) == 0) r2 = (r2 + hi) / 2;
        int left = sturm_variations(chain, lo) - sturm_variations(chain, l2);
        int right = sturm_variations(chain, r2) - sturm_variations(chain, hi);
        isolate_rec(chain, p, lo, l2, left, out);
        isolate_rec(chain, p, r2, hi, right, out);
        return;
    }
    int vm = sturm_variations(chain, mid);
    int left = sturm_variations(chain, lo) - vm;
    int right = vm - sturm_variations(chain, hi);
    isolate_rec(chain, p, lo, mid, left, out);
    isolate_rec(chain, p, mid, hi, right, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const ZPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    ZPoly sf = zpoly_squarefree(p);
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    Rational lo(0), hi = cauchy_bound(sf);
    int n = sturm_variations(chain, lo) - sturm_variations(chain, hi);
    isolate_rec(chain, sf, lo, hi, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

Interval refine_root(const ZPoly& p, Rational lo, Rational hi, int bits) {
    if (lo == hi) return Interval(lo, hi);
    int slo = zpoly_sign_at(p, lo);
    int shi = zpoly_sign_at(p, hi);
    if (shi == 0) return Interval(hi, hi);
    if (slo == 0) {
        // The root sits on the open end; for intervals from isolate_positive_
        // roots this means lo itself is a root of a *different* bracket.
        // Nudge inward until the sign is defined.
        Rational step = (hi - lo) / 1024;
        while (slo == 0) {
            lo += step;
            step /= 2;
            slo = zpoly_sign_at(p, lo);
        }
    }
    if (slo * shi > 0)
        throw DomainError("refine_root: no sign change over the given interval");
    Rational width_target = Rational(1);
    for (int i = 0; i < bits; ++i) width_target /= 2;
    while (hi - lo > width_target) {
        Rational mid = (lo + hi) / 2;
        int sm = zpoly_sign_at(p, mid);
        if (sm == 0) return Interval(mid, mid);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

std::vector<Interval> positive_real_roots(const ZPoly& p, int bits) {
    ZPoly sf = zpoly_squarefree(p);
    std::vector<Interval> out;
    for (const auto& [lo, hi] : isolate_positive_roots(p))
        out.push_back(refine_root(sf, lo, hi, bits));
    return out;
}

}  // namespace surfenum
