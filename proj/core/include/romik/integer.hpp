#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace romik {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor division, rounding towards negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline int sign(const Integer& n) { return sgn(n); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

std::size_t hash_value(const Integer& n) noexcept;

}  // namespace romik
