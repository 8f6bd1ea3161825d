#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace surfenum {

// Exact rational coefficient type. mpq_class keeps values canonicalized
// (lowest terms, positive denominator), which is exactly the invariant we
// need; every arithmetic result stays exact.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "num/den" rendering ("n" when the denominator is 1).
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace surfenum
