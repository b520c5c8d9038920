#pragma once

#include <array>
#include <map>

#include "stackcount/counting.hpp"
#include "stackcount/pleth.hpp"
#include "stackcount/series.hpp"

namespace stackcount {

// 1 x 1 instances of the element conditions: |{0}| = 1, |F^*| = q-1, |F| = q
QRatFun ztype_weight_symbolic(ZType t);
Volume ztype_weight_volume(long long base_q, int len, ZType t);

// order of the unit group of the endomorphism algebra as a polynomial in q
QPoly unit_group_order_poly(const Quiver& qv, const std::vector<int>& d);

struct HOptions {
    uint64_t budget = uint64_t(1) << 34;
};

/* The central object: over each dimension vector 0 <= d <= dmax,
 *     H(t) = sum_d  #{(x,y) in Z_{s1} x Z_{s2} : xy = yx in End} / #units  t^d.
 * Numeric mode evaluates the coefficient at d over the tower F_{q^n} for
 * n = 1 .. floor(|dmax|_1 / |d|_1) -- exactly the window each later Adams
 * substitution may consume -- and stores it as a Volume. */
MSeries<VolRing> h_series_numeric(const Quiver& qv, const std::vector<int>& dmax,
                                  ZType s1, ZType s2, long long base_q,
                                  const HOptions& opts = {});

// all nine condition pairs from three sweeps per dimension vector
std::array<std::array<MSeries<VolRing>, 3>, 3>
h_series_numeric_table(const Quiver& qv, const std::vector<int>& dmax,
                       long long base_q, const HOptions& opts = {});

/* Symbolic mode: fits the integer count of each coefficient as a polynomial
 * in q from samples at the given prime powers (interpolate through
 * degree_bound+1 of them, verify on the rest; needs degree_bound+2 fields)
 * and divides by the known unit-group order polynomial. */
struct SymbolicSeriesResult {
    MSeries<QRatRing> series;
    bool pass = true;
    std::vector<std::string> failures;   // one line per coefficient that failed
};
SymbolicSeriesResult h_series_symbolic(const Quiver& qv,
                                       const std::vector<int>& dmax,
                                       ZType s1, ZType s2,
                                       const std::vector<long long>& fields,
                                       int degree_bound,
                                       const HOptions& opts = {});

// A(t) = (q-1) Log(H) / (w1 w2), the graded invariants behind H
MSeries<QRatRing> extract_ai(const QRatRing& R, const MSeries<QRatRing>& H,
                             ZType s1, ZType s2);
MSeries<VolRing> extract_ai(const VolRing& R, const MSeries<VolRing>& H,
                            ZType s1, ZType s2);

// inverse direction: H = Exp( w1 w2 / (q-1) * A )
MSeries<QRatRing> predict_h(const QRatRing& R, const MSeries<QRatRing>& A,
                            ZType s1, ZType s2);
MSeries<VolRing> predict_h(const VolRing& R, const MSeries<VolRing>& A,
                           ZType s1, ZType s2);

/* Cross-base polynomial fit of every coefficient of a family of numeric
 * series over different base fields, pooling all tower levels (a value
 * reachable from two bases, e.g. 4 = 2^2, must agree).  Adaptive degree:
 * smallest interpolation that verifies on every remaining sample wins. */
struct CoeffFit {
    QPoly poly;
    int spare_points = 0;   // samples beyond the interpolation set
};
struct SeriesFitReport {
    bool pass = true;
    std::map<std::vector<int>, CoeffFit> fits;
    std::vector<std::string> failures;
};
SeriesFitReport fit_series_coeffs(const std::vector<MSeries<VolRing>>& per_base);

/* One base field's worth of the main identity: extract A from all nine
 * condition pairs, demand entrywise agreement, and check the power
 * corollary H^{*,0} = Pow(H^{0,0}, q-1) exactly. */
struct MainTheoremReport {
    long long base_q = 0;
    bool nine_way_pass = false;
    bool pow_corollary_pass = false;
    std::array<std::array<MSeries<VolRing>, 3>, 3> h_table;
    MSeries<VolRing> a_series;   // extracted from the (0,0) pair
    std::vector<std::string> failures;
    bool pass() const { return nine_way_pass && pow_corollary_pass; }
};
MainTheoremReport verify_main_theorem(const Quiver& qv,
                                      const std::vector<int>& dmax,
                                      long long base_q,
                                      const HOptions& opts = {});

} // namespace stackcount
