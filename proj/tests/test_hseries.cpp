#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stackcount/hseries.hpp"

using namespace stackcount;

namespace {

const ZType types[3] = {ZType::nilpotent, ZType::invertible, ZType::all};

QRatFun qrf_one() { return QRatFun::from_int(1); }
QRatFun qm1() { return QRatFun::q(1) - QRatFun::from_int(1); }

} // namespace

TEST_CASE("condition weights") {
    CHECK(ztype_weight_symbolic(ZType::nilpotent) == qrf_one());
    CHECK(ztype_weight_symbolic(ZType::invertible) == qm1());
    CHECK(ztype_weight_symbolic(ZType::all) == QRatFun::q(1));

    Volume inv = ztype_weight_volume(2, 3, ZType::invertible);
    CHECK(inv.entries == std::vector<Rational>{1, 3, 7});
    Volume all = ztype_weight_volume(3, 2, ZType::all);
    CHECK(all.entries == std::vector<Rational>{3, 9});
}

TEST_CASE("unit group order polynomial") {
    Quiver a2 = make_linear_quiver(2);
    Quiver pt = parse_quiver("vertices 1\n");
    Quiver kr = make_kronecker(2);

    // (q-1)^2 q at (1,1): the two diagonal units times the radical line
    QPoly u11 = unit_group_order_poly(a2, {1, 1});
    CHECK(u11.eval(make_rational(2)) == 2);
    CHECK(u11.eval(make_rational(3)) == 12);

    struct Case { const Quiver* qv; std::vector<int> d; };
    for (const auto& [qv, d] : std::initializer_list<Case>{
             {&a2, {1, 1}}, {&a2, {2, 1}}, {&a2, {2, 2}},
             {&kr, {1, 1}}, {&pt, {2}}, {&pt, {3}}}) {
        EndAlgebra A = build_end_algebra(*qv, d);
        for (long q : {2, 3, 5})
            CHECK(unit_group_order_poly(*qv, d).eval(make_rational(q)) ==
                  count_aut(A, static_cast<uint64_t>(q)));
    }
}

TEST_CASE("numeric series windows and frozen entries") {
    Quiver a2 = make_linear_quiver(2);
    VolRing R{2, 2};
    MSeries<VolRing> h = h_series_numeric(a2, {1, 1}, ZType::all, ZType::all, 2);
    CHECK(h.nvars == 2);
    CHECK(h.bound == 2);

    // constant term: exactly 1 through the whole tower
    Volume c0 = series_get(R, h, {0, 0});
    CHECK(c0.entries == std::vector<Rational>{1, 1});

    // d=(1,0): a line; q^2 pairs over q-1 units, sampled at q = 2, 4
    Volume c10 = series_get(R, h, {1, 0});
    CHECK(c10.entries == std::vector<Rational>{4, make_rational(16, 3)});

    // d=(1,1): 40 commuting pairs among the 64 upper-triangular ones, 2 units
    Volume c11 = series_get(R, h, {1, 1});
    CHECK(c11.entries == std::vector<Rational>{20});

    // nilpotent pairs: the strict upper triangle commutes entirely: q^2/((q-1)^2 q)
    MSeries<VolRing> hn = h_series_numeric(a2, {1, 1}, ZType::nilpotent,
                                           ZType::nilpotent, 2);
    CHECK(series_get(R, hn, {1, 1}).entries == std::vector<Rational>{2});
    CHECK(series_get(R, hn, {1, 0}).entries ==
          std::vector<Rational>{1, make_rational(1, 3)});
}

TEST_CASE("table sweep agrees with the per-pair runs") {
    Quiver a2 = make_linear_quiver(2);
    VolRing R{2, 2};
    auto table = h_series_numeric_table(a2, {1, 1}, 2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            MSeries<VolRing> one =
                h_series_numeric(a2, {1, 1}, types[a], types[b], 2);
            CHECK(series_equal(R, table[a][b], one));
        }
}

TEST_CASE("symbolic series fits and rejects") {
    Quiver a2 = make_linear_quiver(2);
    QRatRing R;
    auto res = h_series_symbolic(a2, {1, 1}, ZType::nilpotent, ZType::nilpotent,
                                 {2, 3, 4, 5}, 2);
    REQUIRE(res.pass);
    CHECK(res.failures.empty());
    // q^2 nilpotent pairs over (q-1)^2 q units
    CHECK(series_get(R, res.series, {1, 1}) == QRatFun::q(1) / (qm1() * qm1()));
    CHECK(series_get(R, res.series, {1, 0}) == qrf_one() / qm1());

    // the unconstrained count at (1,1) is quintic: a cubic bound must fail
    auto bad = h_series_symbolic(a2, {1, 1}, ZType::all, ZType::all,
                                 {2, 3, 4, 5, 7}, 3);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failures.size() == 1);
    CHECK(!series_has_unknown(R, bad.series));   // coefficient left out, not poisoned
    CHECK(res.series.c.size() == 4);
    CHECK(bad.series.c.size() == 3);

    // a quintic bound recovers it: q^3 (q^2+q-1) pairs over (q-1)^2 q units
    auto good = h_series_symbolic(a2, {1, 1}, ZType::all, ZType::all,
                                  {2, 3, 4, 5, 7, 8, 9}, 5);
    REQUIRE(good.pass);
    QRatFun expect(QPoly::q(2) * (QPoly::q(2) + QPoly::q(1) - QPoly::from_int(1)),
                   qm1().num * qm1().num);
    CHECK(series_get(R, good.series, {1, 1}) == expect);

    CHECK_THROWS_AS(h_series_symbolic(a2, {1, 1}, ZType::all, ZType::all,
                                      {2, 3}, 2),
                    DomainError);
}

TEST_CASE("invariant extraction and prediction round-trip") {
    Quiver a2 = make_linear_quiver(2);
    QRatRing R;

    for (auto [s1, s2] : {std::pair<ZType, ZType>{ZType::nilpotent, ZType::nilpotent},
                          {ZType::all, ZType::all},
                          {ZType::invertible, ZType::nilpotent}}) {
        auto res = h_series_symbolic(a2, {1, 1}, s1, s2, {2, 3, 4, 5, 7, 8, 9}, 5);
        REQUIRE(res.pass);
        MSeries<QRatRing> A = extract_ai(R, res.series, s1, s2);
        // the invariants of the path algebra at (1,1) are all 1
        CHECK(series_get(R, A, {1, 0}) == qrf_one());
        CHECK(series_get(R, A, {0, 1}) == qrf_one());
        CHECK(series_get(R, A, {1, 1}) == qrf_one());
        CHECK(A.c.size() == 3);
        CHECK(series_equal(R, predict_h(R, A, s1, s2), res.series));
    }

    // volume mode round-trip on a base field
    VolRing RV{3, 2};
    MSeries<VolRing> h =
        h_series_numeric(a2, {1, 1}, ZType::invertible, ZType::all, 3);
    MSeries<VolRing> A = extract_ai(RV, h, ZType::invertible, ZType::all);
    CHECK(series_get(RV, A, {1, 1}).entries == std::vector<Rational>{1});
    CHECK(series_get(RV, A, {1, 0}).entries == std::vector<Rational>{1, 1});
    CHECK(series_equal(RV, predict_h(RV, A, ZType::invertible, ZType::all), h));
}

TEST_CASE("cross-base coefficient fitting") {
    Quiver kr = make_kronecker(2);
    std::vector<MSeries<VolRing>> runs;
    for (long long b : {2, 3, 4})
        runs.push_back(extract_ai(VolRing{b, 2},
                                  h_series_numeric(kr, {1, 1}, ZType::nilpotent,
                                                   ZType::nilpotent, b),
                                  ZType::nilpotent, ZType::nilpotent));
    SeriesFitReport rep = fit_series_coeffs(runs);
    REQUIRE(rep.pass);
    // invariants of the double arrow at (1,1): 1, 1, q+1
    CHECK(rep.fits.at({1, 0}).poly == QPoly::from_int(1));
    CHECK(rep.fits.at({1, 0}).spare_points >= 2);
    CHECK(rep.fits.at({1, 1}).poly == QPoly::q(1) + QPoly::from_int(1));
    CHECK(rep.fits.at({1, 1}).spare_points == 1);

    // towers overlapping at q = 4 must agree; a doctored value is reported
    MSeries<VolRing> fake2 = series_zero(VolRing{2, 2}, 1, 2);
    MSeries<VolRing> fake4 = series_zero(VolRing{4, 2}, 1, 2);
    series_set(VolRing{2, 2}, fake2, {1}, Volume(2, {make_rational(1), make_rational(5)}));
    series_set(VolRing{4, 2}, fake4, {1}, Volume(4, {make_rational(7)}));
    SeriesFitReport clash = fit_series_coeffs({fake2, fake4});
    CHECK_FALSE(clash.pass);
    REQUIRE(clash.failures.size() == 1);
    CHECK(clash.failures[0].find("q=4") != std::string::npos);

    // values of 1/(q-1) admit no polynomial fit
    MSeries<VolRing> r2 = series_zero(VolRing{2, 2}, 1, 2);
    MSeries<VolRing> r3 = series_zero(VolRing{3, 2}, 1, 2);
    series_set(VolRing{2, 2}, r2, {1}, Volume(2, {make_rational(1), make_rational(1, 3)}));
    series_set(VolRing{3, 2}, r3, {1}, Volume(3, {make_rational(1, 2), make_rational(1, 8)}));
    SeriesFitReport nofit = fit_series_coeffs({r2, r3});
    CHECK_FALSE(nofit.pass);
    CHECK(nofit.fits.count({1}) == 0);
}

TEST_CASE("main identity across all nine condition pairs") {
    Quiver a2 = make_linear_quiver(2);
    MainTheoremReport rep = verify_main_theorem(a2, {1, 1}, 2);
    CHECK(rep.pass());
    CHECK(rep.nine_way_pass);
    CHECK(rep.pow_corollary_pass);
    CHECK(rep.failures.empty());
    CHECK(rep.base_q == 2);
    VolRing R{2, 2};
    CHECK(series_get(R, rep.a_series, {1, 1}).entries == std::vector<Rational>{1});

    Quiver kr = make_kronecker(2);
    MainTheoremReport krep = verify_main_theorem(kr, {1, 1}, 3);
    CHECK(krep.pass());
    // invariant q+1 sampled at q = 3
    CHECK(series_get(VolRing{3, 2}, krep.a_series, {1, 1}).entries ==
          std::vector<Rational>{4});
}

TEST_CASE("input validation and budgets") {
    Quiver a2 = make_linear_quiver(2);
    Quiver pt = parse_quiver("vertices 1\n");
    CHECK_THROWS_AS(h_series_numeric(a2, {1}, ZType::all, ZType::all, 2), DomainError);
    CHECK_THROWS_AS(h_series_numeric(a2, {1, -1}, ZType::all, ZType::all, 2), DomainError);
    CHECK_THROWS_AS(h_series_numeric(a2, {0, 0}, ZType::all, ZType::all, 2), DomainError);

    /* F_{2048^2} is beyond the supported field sizes: the singleton windows
     * shrink to their base entry instead of erroring (the (1,1) sweep stays
     * cheap because the nilpotent fibers avoid the big class enumeration). */
    MSeries<VolRing> wide =
        h_series_numeric(a2, {1, 1}, ZType::nilpotent, ZType::nilpotent, 2048);
    CHECK(series_get(VolRing{2048, 2}, wide, {1, 0}).len() == 1);
    CHECK(series_get(VolRing{2048, 2}, wide, {1, 1}).len() == 1);
    // a base-field entry nothing can enumerate is still an error
    CHECK_THROWS_AS(h_series_numeric(pt, {2}, ZType::all, ZType::all, 2048),
                    BudgetExceeded);
    CHECK_THROWS_AS(h_series_numeric(pt, {1}, ZType::all, ZType::all, 1 << 21),
                    BudgetExceeded);
    // enumeration budget reaches the counting engine and bites at n = 1
    HOptions tight;
    tight.budget = 8;
    CHECK_THROWS_AS(h_series_numeric(pt, {2}, ZType::all, ZType::all, 3, tight),
                    BudgetExceeded);
}
