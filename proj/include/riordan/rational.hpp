#pragma once

#include <gmpxx.h>

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

// Exact arbitrary-precision arithmetic. GMP's C++ classes already keep
// rationals canonical (lowest terms, positive denominator) under arithmetic;
// the helpers below cover construction and the few conversions we need.
using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms. d must be nonzero.
inline Rational rat(long n, long d = 1) {
    if (d == 0) {
        throw SingularDivisionError("rational with zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// The integer value of an integer-valued rational.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw IdentityError("expected an integer value, got " + q.get_str());
    }
    return q.get_num();
}

// "17", "-4", or "3/7" for non-integers.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace riordan
