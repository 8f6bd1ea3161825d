#include "surfenum/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace surfenum {

namespace {

void set_from_rational(mpfr_t out, const Rational& q, mpfr_rnd_t rnd) {
    mpfr_set_q(out, q.get_mpq_t(), rnd);
}

}  // namespace

Interval::Interval() : Interval(Rational(0)) {}

Interval::Interval(mpfr_prec_t prec, bool) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(q, q, prec) {}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : prec_(prec) {
    if (lo > hi) throw DomainError("Interval: lower bound exceeds upper bound");
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    set_from_rational(lo_, lo, MPFR_RNDD);
    set_from_rational(hi_, hi, MPFR_RNDU);
}

Interval::Interval(long v, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec, true);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_), true);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_), true);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_, true);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_), true);
    // Enclosure as the min/max over the four endpoint products, each computed
    // with the rounding direction matching the bound it feeds.
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (const auto& a : as)
        for (const auto& b : bs) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw DomainError("Interval: division by interval containing zero");
    Interval r(std::max(prec_, o.prec_), true);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (const auto& a : as)
        for (const auto& b : bs) {
            mpfr_div(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

void Interval::require_positive(const char* op) const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError(std::string("Interval::") + op + ": operand must be positive");
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("Interval::sqrt: operand must be nonnegative");
    Interval r(prec_, true);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned k) const {
    if (k == 0) throw DomainError("Interval::root: k must be positive");
    if (k % 2 == 0 && mpfr_sgn(lo_) < 0)
        throw DomainError("Interval::root: even root of a negative interval");
    Interval r(prec_, true);
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    if (e == 0) return Interval(Rational(1), prec_);
    if (e < 0) {
        if (contains_zero()) throw DomainError("Interval::pow_int: negative power of interval containing zero");
        return Interval(Rational(1), prec_) / pow_int(-e);
    }
    // x^e is monotone on each sign region; for even e and mixed sign the
    // minimum is 0.
    Interval r(prec_, true);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_pow_si(a, lo_, e, (e % 2 == 1 || mpfr_sgn(lo_) >= 0) ? MPFR_RNDD : MPFR_RNDU);
    mpfr_pow_si(b, hi_, e, MPFR_RNDU);
    if (e % 2 == 1 || mpfr_sgn(lo_) >= 0) {
        mpfr_set(r.lo_, a, MPFR_RNDD);
        mpfr_set(r.hi_, b, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        // both nonpositive, even power: decreasing
        mpfr_pow_si(a, hi_, e, MPFR_RNDD);
        mpfr_pow_si(b, lo_, e, MPFR_RNDU);
        mpfr_set(r.lo_, a, MPFR_RNDD);
        mpfr_set(r.hi_, b, MPFR_RNDU);
    } else {
        mpfr_set_si(r.lo_, 0, MPFR_RNDD);
        mpfr_pow_si(a, lo_, e, MPFR_RNDU);  // |lo|^e upper
        mpfr_abs(a, a, MPFR_RNDU);
        if (mpfr_cmp(a, b) > 0)
            mpfr_set(r.hi_, a, MPFR_RNDU);
        else
            mpfr_set(r.hi_, b, MPFR_RNDU);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

Interval Interval::pow_rational(const Rational& e) const {
    Integer num = e.get_num();
    Integer den = e.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p())
        throw DomainError("Interval::pow_rational: exponent out of range");
    long n = num.get_si();
    unsigned long d = den.get_ui();
    if (d == 1) return pow_int(n);
    require_positive("pow_rational");
    return pow_int(n).root(static_cast<unsigned>(d));
}

Interval Interval::log() const {
    require_positive("log");
    Interval r(prec_, true);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_, true);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains(const Rational& q) const {
    // Compare exactly against the rational value.
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

int Interval::sign() const {
    if (is_positive()) return 1;
    if (is_negative()) return -1;
    return 0;
}

double Interval::width() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

double Interval::midpoint() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    double m = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return m;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {
Rational rational_of(mpfr_srcptr x) {
    if (!mpfr_number_p(x)) throw DomainError("Interval: non-finite endpoint");
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational r(q);
    mpq_clear(q);
    return r;
}
}  // namespace

Rational Interval::lower_rational() const { return rational_of(lo_); }
Rational Interval::upper_rational() const { return rational_of(hi_); }

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec_, b.prec_), true);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

std::string Interval::to_string(int digits) const {
    if (digits < 1) digits = 1;
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, mid);
    mpfr_clear(mid);
    return std::string(buf.data());
}

}  // namespace surfenum
