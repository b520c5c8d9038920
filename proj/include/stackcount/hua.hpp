#pragma once

#include <map>

#include "stackcount/pleth.hpp"
#include "stackcount/quiver.hpp"
#include "stackcount/series.hpp"

namespace stackcount {

// weakly decreasing positive parts; the empty partition is {}
using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);   // all partitions of n >= 0

// <la, mu> = sum_i la'_i mu'_i over conjugate parts
long partition_pairing(const Partition& la, const Partition& mu);

// (q^{-1})_la = prod over part sizes i of (q^{-1})_{m_i}, m_i = multiplicity
QRatFun pochhammer_partition(const Partition& la);

/* Multi-variable partition sum attached to the quiver: the coefficient of
 * t^d collects all tuples (la_v) with |la_v| = d_v of
 *     q^( sum_{arrows i->j} <la_i, la_j>  -  sum_v <la_v, la_v> )
 *     / prod_v (q^{-1})_{la_v} .
 * Its scaled logarithm (q-1) Log is the generating series of the
 * indecomposable-representation counts over the algebraic closure, which
 * the tests pin down independently through orbit counting. */
MSeries<QRatRing> hua_series(const Quiver& qv, const std::vector<int>& dmax);

// graded indecomposability invariants: (q-1) Log(hua_series); the
// coefficients are polynomials in q
MSeries<QRatRing> kac_polynomials(const Quiver& qv, const std::vector<int>& dmax);

/* Indecomposable representations over F_q by Galois descent from the
 * absolutely-indecomposable table:
 *     I(d) = sum_{r : d = r d'} (1/r) sum_{e | r} mu(e) A_{d'}(q^{r/e}) . */
Rational indecomposable_count(const std::map<std::vector<int>, QRatFun>& a_table,
                              const std::vector<int>& d, const Rational& q);

/* Isomorphism classes of representations of dimension vector d over F_q:
 * the coefficient of t^d in prod_{d' != 0} (1 - t^{d'})^{-I(d')} by
 * Krull-Schmidt uniqueness. */
Rational isoclass_count(const std::map<std::vector<int>, QRatFun>& a_table,
                        const std::vector<int>& d, const Rational& q);

} // namespace stackcount
