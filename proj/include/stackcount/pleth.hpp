#pragma once

#include <algorithm>

#include "stackcount/series.hpp"

namespace stackcount {

inline int moebius(long n) {
    if (n < 1) throw DomainError("moebius needs n >= 1");
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

namespace detail {

template <class Ring>
bool constant_term_vanishes(const Ring& R, const MSeries<Ring>& a) {
    auto v = series_get(R, a, std::vector<int>(a.nvars, 0));
    return R.is_droppable_zero(v) || R.equal(v, R.zero());
}

template <class Ring>
MSeries<Ring> drop_constant(const Ring& R, const MSeries<Ring>& a) {
    MSeries<Ring> r = a;
    r.c.erase(std::vector<int>(a.nvars, 0));
    (void)R;
    return r;
}

} // namespace detail

/// exp of a series with zero constant term, as a plain power series in the
/// series variables (coefficient ring untouched beyond its own arithmetic).
template <class Ring>
MSeries<Ring> series_exp_plain(const Ring& R, const MSeries<Ring>& a) {
    if (!detail::constant_term_vanishes(R, a))
        throw DomainError("series exp needs a vanishing constant term");
    MSeries<Ring> x = detail::drop_constant(R, a);
    MSeries<Ring> acc = series_one(R, a.nvars, a.bound, a.caps);
    MSeries<Ring> term = acc;
    for (long k = 1; k <= a.bound; ++k) {
        term = series_mul(R, term, x);
        if (term.c.empty()) break;
        for (auto& [e, v] : term.c) v = R.div_int(v, k);   // term = x^k / k!
        acc = series_add(R, acc, term);
    }
    return acc;
}

/// log of a series with constant term 1, plain power series inverse of exp.
template <class Ring>
MSeries<Ring> series_log_plain(const Ring& R, const MSeries<Ring>& a) {
    auto c0 = series_get(R, a, std::vector<int>(a.nvars, 0));
    if (!R.equal(c0, R.one()))
        throw DomainError("series log needs constant term 1");
    MSeries<Ring> x = detail::drop_constant(R, a);
    MSeries<Ring> acc = series_zero(R, a.nvars, a.bound, a.caps);
    MSeries<Ring> pw = series_one(R, a.nvars, a.bound, a.caps);
    for (long k = 1; k <= a.bound; ++k) {
        pw = series_mul(R, pw, x);
        if (pw.c.empty()) break;
        MSeries<Ring> contrib = pw;
        long s = (k % 2 == 1) ? k : -k;    // (-1)^(k-1) / k
        for (auto& [e, v] : contrib.c) v = R.div_int(v, s);
        acc = series_add(R, acc, contrib);
    }
    return acc;
}

/// Plethystic exponential: Exp(a) = exp(sum_{n>=1} psi_n(a)/n).
/// Requires a vanishing constant term.
template <class Ring>
MSeries<Ring> pleth_exp(const Ring& R, const MSeries<Ring>& a) {
    if (!detail::constant_term_vanishes(R, a))
        throw DomainError("plethystic exp needs a vanishing constant term");
    MSeries<Ring> s = series_zero(R, a.nvars, a.bound, a.caps);
    for (int n = 1; n <= a.bound; ++n) {
        MSeries<Ring> t = series_psi(R, a, n);
        if (t.c.empty()) continue;
        for (auto& [e, v] : t.c) v = R.div_int(v, n);
        s = series_add(R, s, t);
    }
    return series_exp_plain(R, s);
}

/// Plethystic logarithm, inverse of pleth_exp on constant-term-1 series:
/// Log(a) = sum_{n>=1} mu(n)/n * psi_n(log a).
template <class Ring>
MSeries<Ring> pleth_log(const Ring& R, const MSeries<Ring>& a) {
    MSeries<Ring> l = series_log_plain(R, a);
    MSeries<Ring> s = series_zero(R, a.nvars, a.bound, a.caps);
    for (int n = 1; n <= std::max(a.bound, 1); ++n) {
        int mu = moebius(n);
        if (mu == 0) continue;
        MSeries<Ring> t = series_psi(R, l, n);
        if (t.c.empty()) continue;
        for (auto& [e, v] : t.c) v = R.div_int(v, mu * n);
        s = series_add(R, s, t);
    }
    return s;
}

/// Plethystic power with exponent in the coefficient ring:
/// Pow(a, b) = Exp(b * Log(a)).
template <class Ring>
MSeries<Ring> pleth_pow(const Ring& R, const MSeries<Ring>& a,
                        const typename Ring::Elem& b) {
    return pleth_exp(R, series_scale(R, b, pleth_log(R, a)));
}

/// Plain power with a constant coefficient-ring exponent:
/// a^c = exp(c * log a).  This is ordinary powering, not Pow: for integer c
/// it agrees with repeated multiplication.
template <class Ring>
MSeries<Ring> series_pow_elem(const Ring& R, const MSeries<Ring>& a,
                              const typename Ring::Elem& c) {
    return series_exp_plain(R, series_scale(R, c, series_log_plain(R, a)));
}

/* Product form of the plethystic power.  When the exponent b decomposes as
 * psi_n(b) = sum_{r | n} r * parts[r] with each parts[r] independent of n,
 *     Pow(a, b) = prod_{r >= 1} psi_r(a)^{parts[r]}
 * with plain (non-plethystic) powers on the right.  parts holds the nonzero
 * decomposition entries; indices beyond the truncation bound are ignored. */
template <class Ring>
MSeries<Ring> pow_product_form(const Ring& R, const MSeries<Ring>& a,
                               const std::map<int, typename Ring::Elem>& parts) {
    MSeries<Ring> acc = series_one(R, a.nvars, a.bound, a.caps);
    for (const auto& [r, br] : parts) {
        if (r < 1) throw DomainError("product-form index must be >= 1");
        if (r > a.bound) continue;
        acc = series_mul(R, acc, series_pow_elem(R, series_psi(R, a, r), br));
    }
    return acc;
}

} // namespace stackcount
