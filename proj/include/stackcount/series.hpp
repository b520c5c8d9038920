#pragma once

#include <algorithm>
#include <map>
#include <type_traits>
#include <vector>

#include "stackcount/qpoly.hpp"
#include "stackcount/volume.hpp"

namespace stackcount {

/* Multivariate truncated series with coefficients in an abstract ring.  The
 * ring is passed explicitly as an object R supplying the element operations,
 * because the numeric (volume) model needs context: a base prime power and a
 * requested validity length for materialized constants.
 *
 * A series is exact modulo the ideal spanned by monomials of total degree
 * > bound, plus t_i^{caps_i + 1} when per-variable caps are present.  Absent
 * map entries are structural zeros.  In the volume model a coefficient whose
 * validity window became empty (len 0) stays in the map as an explicit
 * "unknown" marker so downstream consumers can tell it apart from zero. */

struct QRatRing {
    using Elem = QRatFun;
    Elem zero() const { return QRatFun(); }
    Elem one() const { return QRatFun::from_int(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scale_int(const Elem& a, long s) const { return QRatFun::from_int(s) * a; }
    Elem div_int(const Elem& a, long s) const {
        if (s == 0) throw DomainError("division by zero integer");
        return a / QRatFun::from_int(s);
    }
    Elem psi(const Elem& a, int n) const { return adams_substitute(a, n); }
    bool is_known(const Elem&) const { return true; }
    bool is_droppable_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

struct VolRing {
    long long base_q;
    int len;   // validity length for materialized constants

    using Elem = Volume;
    Elem zero() const { return Volume::constant(base_q, Rational(0), len); }
    Elem one() const { return Volume::constant(base_q, Rational(1), len); }
    Elem add(const Elem& a, const Elem& b) const { return vol_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return vol_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return vol_mul(a, b); }
    Elem scale_int(const Elem& a, long s) const { return vol_scale(make_rational(s), a); }
    Elem div_int(const Elem& a, long s) const {
        if (s == 0) throw DomainError("division by zero integer");
        return vol_scale(make_rational(1, s), a);
    }
    Elem psi(const Elem& a, int n) const { return vol_adams_relaxed(a, n); }
    bool is_known(const Elem& a) const { return a.len() > 0; }
    /* A zero with a shortened window makes a weaker claim than structural
     * absence, so only full-validity zeros may be removed from the map. */
    bool is_droppable_zero(const Elem& a) const {
        if (a.len() < len) return false;
        for (const auto& e : a.entries)
            if (e != 0) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

template <class Ring>
struct MSeries {
    int nvars = 1;
    int bound = 0;                // inclusive total-degree cap
    std::vector<int> caps;        // optional per-variable caps; empty = none
    std::map<std::vector<int>, typename Ring::Elem> c;

    bool admissible(const std::vector<int>& e) const {
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) return false;
            if (!caps.empty() && e[i] > caps[i]) return false;
            total += e[i];
        }
        return total <= bound;
    }
};

template <class Ring>
MSeries<Ring> series_zero(const Ring&, int nvars, int bound, std::vector<int> caps = {}) {
    if (nvars < 1) throw DomainError("series needs at least one variable");
    if (!caps.empty() && static_cast<int>(caps.size()) != nvars)
        throw DomainError("caps length does not match variable count");
    MSeries<Ring> s;
    s.nvars = nvars;
    s.bound = bound;
    s.caps = std::move(caps);
    return s;
}

template <class Ring>
MSeries<Ring> series_one(const Ring& R, int nvars, int bound, std::vector<int> caps = {}) {
    MSeries<Ring> s = series_zero(R, nvars, bound, std::move(caps));
    s.c[std::vector<int>(nvars, 0)] = R.one();
    return s;
}

template <class Ring>
void series_set(const Ring& R, MSeries<Ring>& s, const std::vector<int>& e,
                const typename Ring::Elem& v) {
    if (static_cast<int>(e.size()) != s.nvars) throw DomainError("exponent arity mismatch");
    if (!s.admissible(e)) throw DomainError("exponent outside the truncation window");
    if (R.is_droppable_zero(v)) s.c.erase(e);
    else s.c[e] = v;
}

template <class Ring>
typename Ring::Elem series_get(const Ring& R, const MSeries<Ring>& s,
                               const std::vector<int>& e) {
    auto it = s.c.find(e);
    if (it != s.c.end()) return it->second;
    return R.zero();
}

template <class Ring>
bool series_has_unknown(const Ring& R, const MSeries<Ring>& s) {
    for (const auto& [e, v] : s.c)
        if (!R.is_known(v)) return true;
    return false;
}

/// Exponents whose coefficient became unknown (volume mode validity ran out).
template <class Ring>
std::vector<std::vector<int>> series_unknown_exponents(const Ring& R, const MSeries<Ring>& s) {
    std::vector<std::vector<int>> out;
    for (const auto& [e, v] : s.c)
        if (!R.is_known(v)) out.push_back(e);
    return out;
}

namespace detail {

template <class Ring>
void merge_window(const MSeries<Ring>& a, const MSeries<Ring>& b, MSeries<Ring>& r) {
    if (a.nvars != b.nvars) throw DomainError("series variable count mismatch");
    r.nvars = a.nvars;
    r.bound = std::min(a.bound, b.bound);
    if (a.caps.empty()) r.caps = b.caps;
    else if (b.caps.empty()) r.caps = a.caps;
    else {
        r.caps.resize(a.caps.size());
        for (size_t i = 0; i < a.caps.size(); ++i)
            r.caps[i] = std::min(a.caps[i], b.caps[i]);
    }
}

template <class Ring>
void prune(const Ring& R, MSeries<Ring>& s) {
    for (auto it = s.c.begin(); it != s.c.end();) {
        if (R.is_droppable_zero(it->second)) it = s.c.erase(it);
        else ++it;
    }
}

} // namespace detail

template <class Ring>
MSeries<Ring> series_add(const Ring& R, const MSeries<Ring>& a, const MSeries<Ring>& b) {
    MSeries<Ring> r;
    detail::merge_window(a, b, r);
    for (const auto& [e, v] : a.c)
        if (r.admissible(e)) r.c[e] = v;
    for (const auto& [e, v] : b.c) {
        if (!r.admissible(e)) continue;
        auto it = r.c.find(e);
        if (it == r.c.end()) r.c[e] = v;
        else it->second = R.add(it->second, v);
    }
    detail::prune(R, r);
    return r;
}

template <class Ring>
MSeries<Ring> series_scale_int(const Ring& R, const MSeries<Ring>& a, long s) {
    MSeries<Ring> r = a;
    for (auto& [e, v] : r.c) v = R.scale_int(v, s);
    detail::prune(R, r);
    return r;
}

template <class Ring>
MSeries<Ring> series_sub(const Ring& R, const MSeries<Ring>& a, const MSeries<Ring>& b) {
    return series_add(R, a, series_scale_int(R, b, -1));
}

template <class Ring>
MSeries<Ring> series_mul(const Ring& R, const MSeries<Ring>& a, const MSeries<Ring>& b) {
    MSeries<Ring> r;
    detail::merge_window(a, b, r);
    for (const auto& [ea, va] : a.c) {
        for (const auto& [eb, vb] : b.c) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (!r.admissible(e)) continue;
            typename Ring::Elem prod = R.mul(va, vb);
            auto it = r.c.find(e);
            if (it == r.c.end()) r.c[e] = std::move(prod);
            else it->second = R.add(it->second, prod);
        }
    }
    detail::prune(R, r);
    return r;
}

/// Scalar multiplication by a coefficient-ring element.
template <class Ring>
MSeries<Ring> series_scale(const Ring& R, const typename Ring::Elem& s,
                           const MSeries<Ring>& a) {
    MSeries<Ring> r = a;
    for (auto& [e, v] : r.c) v = R.mul(s, v);
    detail::prune(R, r);
    return r;
}

/// Adams operation: multiplies exponents by n and applies psi_n to each
/// coefficient.  In the volume model a coefficient whose window empties stays
/// as an unknown marker (len 0) rather than silently vanishing.
template <class Ring>
MSeries<Ring> series_psi(const Ring& R, const MSeries<Ring>& a, int n) {
    if (n < 1) throw DomainError("series psi needs n >= 1");
    MSeries<Ring> r = series_zero(R, a.nvars, a.bound, a.caps);
    for (const auto& [e, v] : a.c) {
        std::vector<int> f(e.size());
        for (size_t i = 0; i < e.size(); ++i) f[i] = e[i] * n;
        if (!r.admissible(f)) continue;
        r.c[f] = R.psi(v, n);
    }
    detail::prune(R, r);
    return r;
}

/* Equality on everything both sides actually claim.  In the volume model a
 * difference coefficient with a shortened-but-all-zero window is agreement on
 * the common window, and an empty window (one side unknown) is no evidence
 * either way; use series_unknown_exponents on the operands to audit coverage. */
template <class Ring>
bool series_equal(const Ring& R, const MSeries<Ring>& a, const MSeries<Ring>& b) {
    MSeries<Ring> d = series_sub(R, a, b);
    for (const auto& [e, v] : d.c)
        if (!R.is_droppable_zero(v)) {
            if constexpr (std::is_same_v<Ring, VolRing>) {
                bool allz = true;
                for (const auto& x : v.entries)
                    if (x != 0) { allz = false; break; }
                if (allz) continue;
            }
            return false;
        }
    return true;
}

} // namespace stackcount
