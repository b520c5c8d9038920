#pragma once

#include "stackcount/pleth.hpp"
#include "stackcount/series.hpp"

namespace stackcount {

/* Frozen closed forms and reference data used to cross-check the counting
 * engines.  Everything here is computed by elementary q-series arithmetic
 * (Pochhammer products, geometric sums) and never touches the fiber or
 * Burnside engines, so agreement between the two sides is meaningful. */

// reference invariants of the strictly-upper-triangular commuting pairs,
// alpha_1 .. alpha_10 (index 0 unused)
const std::vector<QPoly>& reference_alpha_table();

// reference top-coefficient invariants A_1 .. A_10 (index 0 unused)
const std::vector<QPoly>& reference_a_table();

// number of monic irreducibles of degree r: (1/r) sum_{d|r} mu(r/d) q^d
QPoly necklace_poly(int r);

// two-parameter Pochhammer (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j)
QRatFun pochhammer_shifted(const QRatFun& a, int n);

// unit-normalized count of pairs of commuting matrices, all sizes up to nmax:
//   prod_{i>=1} sum_k (q t^i)^k / (q^{-1})_k
// (evaluating the product of q-exponentials directly, no plethystic ops)
MSeries<QRatRing> oracle_commuting_matrix_series(int nmax);

// unit-normalized count of single matrices: sum_n t^n / (q^{-1})_n
MSeries<QRatRing> oracle_matrix_series(int nmax);

// q-binomial theorem series: sum_n (a;q)_n / (q;q)_n t^n
MSeries<QRatRing> oracle_qbinomial_series(const QRatFun& a, int nmax);

// number of nilpotent n x n matrices: q^(n^2 - n)
Int nilpotent_count_closed_form(uint64_t q, int n);

} // namespace stackcount
