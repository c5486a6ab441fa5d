#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gwzeta {

// All ranks, point counts and recurrence arithmetic are exact.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer ipow(long base, unsigned long e) { return ipow(Integer(base), e); }

inline bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Exact quotient; throws if the division leaves a remainder.
inline Integer divexact(const Integer& a, const Integer& b, const std::string& what) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error(what + ": " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

inline long to_long(const Integer& x, const std::string& what) {
    if (!x.fits_slong_p()) throw std::overflow_error(what + ": value " + x.get_str() + " out of machine range");
    return x.get_si();
}

// JSON-safe integers are those below 2^53 in magnitude.
inline bool fits_json_number(const Integer& x) {
    static const Integer bound = Integer(1) << 53;
    return x < bound && x > -bound;
}

}  // namespace gwzeta
