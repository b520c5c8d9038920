#pragma once

#include <variant>
#include <vector>

#include "stackcount/qpoly.hpp"

namespace stackcount {

/// Element of the volume ring: the point-count sequence (a_n)_{n>=1} of some
/// invariant over the field tower F_{q^n}, truncated to `entries.size()`
/// verified values.  base_q is the prime power q of the tower.  Operations
/// are entrywise; the Adams operation psi_m reindexes n -> m*n and shrinks
/// the validity window.
struct Volume {
    long long base_q = 0;
    std::vector<Rational> entries;

    Volume() = default;
    Volume(long long q, std::vector<Rational> e);   // validates q is a prime power

    int len() const { return static_cast<int>(entries.size()); }

    /// Constant sequence (c, c, ..., c) of the given validity.
    static Volume constant(long long q, const Rational& c, int len);
};

bool operator==(const Volume& a, const Volume& b);

Volume vol_add(const Volume& a, const Volume& b);
Volume vol_sub(const Volume& a, const Volume& b);
Volume vol_mul(const Volume& a, const Volume& b);
Volume vol_div(const Volume& a, const Volume& b);   // throws on a zero entry of b
Volume vol_scale(const Rational& s, const Volume& a);

/// psi_m: (a_m, a_{2m}, ...), validity floor(len/m).  Throws DomainError when
/// the result would be empty; vol_adams_relaxed returns the empty-window
/// volume instead (used by the series layer to mark dropped coefficients).
Volume vol_adams(const Volume& a, int m);
Volume vol_adams_relaxed(const Volume& a, int m);

/// Samples f at q^1, ..., q^len exactly.  Ring homomorphism in f; commutes
/// with Adams operations on both sides.
Volume vol_from_ratfun(const QRatFun& f, long long base_q, int len);

struct FitFailure {
    size_t witness_index = 0;   // index into the sample list
    long long q = 0;
    Rational expected;          // value of the interpolated polynomial at q
    Rational actual;            // the sample that contradicts it
};

/// Exact polynomial-count detection: Lagrange interpolation through the first
/// degree_bound+1 samples, then verification on every remaining sample.
/// Needs at least degree_bound+2 samples at pairwise distinct prime powers.
std::variant<QPoly, FitFailure>
detect_polynomial_count(const std::vector<std::pair<long long, Rational>>& samples,
                        int degree_bound);

} // namespace stackcount
