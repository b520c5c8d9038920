#pragma once

#include <cstdint>
#include <vector>

#include "stackcount/qpoly.hpp"

namespace stackcount {

struct AlphaOptions {
    uint64_t budget = uint64_t(1) << 34;
    // group the Burnside sum into diagonal-conjugation orbits (exact
    // regrouping; false forces the plain sum for cross-checking)
    bool torus_reduction = true;
};

// #{(u,v) strictly upper-triangular n x n over F_q : uv = vu}, exact
Int strict_commuting_pairs(int n, uint64_t q, const AlphaOptions& opts = {});

// alpha_n(q) = strict_commuting_pairs / q^(n(n-1)/2); the division is exact
Int alpha_value(int n, uint64_t q, const AlphaOptions& opts = {});

/* Fit alpha_n as a polynomial from samples at the given prime powers.
 * Interpolates through all points and records how many exceeded the
 * degree+1 actually needed (spare_points = #samples - deg - 1; zero means
 * the fit is an interpolation with no independent confirmation). */
struct AlphaFit {
    QPoly poly;
    std::vector<std::pair<long long, Int>> samples;
    int spare_points = 0;
};
AlphaFit alpha_invariants(int n, const std::vector<long long>& fields,
                          const AlphaOptions& opts = {});

/* Top multilinear invariant from the alpha table by set-partition
 * inversion:
 *   A_n (q-1)^{n-1} = sum over partition types la of n of
 *       (-1)^{len-1} (len-1)! #{set partitions of type la} prod_i alpha_{la_i}
 * with the division by (q-1)^{n-1} exact.  alpha[k] holds alpha_k
 * (index 0 unused); requires alpha.size() > n. */
QPoly a_from_alpha(const std::vector<QPoly>& alpha, int n);

} // namespace stackcount
