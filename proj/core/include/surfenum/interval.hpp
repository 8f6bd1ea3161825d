#pragma once

#include "surfenum/errors.hpp"
#include "surfenum/rational.hpp"

// gmpxx must precede mpfr.h so the mpq conversion prototypes are visible.
#include <mpfr.h>

#include <string>

namespace surfenum {

// A closed real interval [lo, hi] with MPFR endpoints and outward rounding.
// All operations return enclosures of the exact image. Default precision is
// 256 bits; every value carries its own precision.
class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    Interval();                                  // [0, 0]
    explicit Interval(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
    Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec = kDefaultPrecision);
    explicit Interval(long v, mpfr_prec_t prec = kDefaultPrecision);

    Interval(const Interval&);
    Interval& operator=(const Interval&);
    Interval(Interval&&) noexcept;
    Interval& operator=(Interval&&) noexcept;
    ~Interval();

    static Interval pi(mpfr_prec_t prec = kDefaultPrecision);

    Interval operator+(const Interval&) const;
    Interval operator-(const Interval&) const;
    Interval operator*(const Interval&) const;
    Interval operator/(const Interval&) const;  // divisor must exclude zero
    Interval operator-() const;

    Interval sqrt() const;           // operand must be >= 0
    Interval root(unsigned k) const;  // k-th root, operand >= 0 for even k
    Interval pow_int(long e) const;   // integer power (negative e excludes zero)
    Interval pow_rational(const Rational& e) const;  // positive base
    Interval log() const;             // operand must be > 0
    Interval exp() const;

    bool contains(const Rational& q) const;
    bool contains_zero() const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    // Definite sign: +1, -1, or 0 when the interval straddles zero.
    int sign() const;

    double width() const;
    double midpoint() const;
    double lower() const;
    double upper() const;
    Rational lower_rational() const;
    Rational upper_rational() const;

    // Hull of two intervals.
    static Interval hull(const Interval& a, const Interval& b);

    // Decimal rendering of the midpoint with `digits` significant digits.
    std::string to_string(int digits = 20) const;

    mpfr_prec_t precision() const { return prec_; }

private:
    explicit Interval(mpfr_prec_t prec, bool);  // uninitialized endpoints helper
    void require_positive(const char* op) const;

    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

}  // namespace surfenum
