#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "stackcount/errors.hpp"

namespace stackcount {

/* Exact arithmetic base types.  mpq_class keeps the canonical form we need:
 * gcd(num, den) = 1 and den > 0, maintained on every operation. */
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/* "p/q" with the "/q" part omitted when q = 1; parses both forms. */
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    try {
        Rational r(s);
        if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/* Writes q = p^k with p prime when it returns true. */
inline bool is_prime_power(std::uint64_t q, std::uint64_t* p_out = nullptr,
                           unsigned* k_out = nullptr) {
    if (q < 2) return false;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    unsigned k = 0;
    std::uint64_t m = q;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

} // namespace stackcount
