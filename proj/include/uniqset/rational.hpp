#pragma once

#include <gmpxx.h>

#include <string>

#include "uniqset/errors.hpp"

namespace uniqset {

using Integer = mpz_class;

/// Exact rational, always canonical: reduced to lowest terms, denominator
/// positive. All gmpxx arithmetic preserves canonical form.
using Rational = mpq_class;

/// Parses "num/den" or "num" (base 10) and canonicalizes.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw SchemaError("malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw SchemaError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for any integer e (base must be nonzero when e < 0).
inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    const unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer num = pow_ui(Integer(base.get_num()), a);
    Integer den = pow_ui(Integer(base.get_den()), a);
    if (e < 0) {
        if (sgn(num) == 0) throw DivisionByZero();
        std::swap(num, den);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// The integer k with a in [k, k+1) for a >= 0 and a in (k-1, k] for a < 0,
/// i.e. truncation toward zero.
inline Integer trunc_toward_zero(const Rational& a) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace uniqset
