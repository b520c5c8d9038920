#include "stackcount/oracles.hpp"

namespace stackcount {

namespace {

QPoly poly_from_coeffs(std::vector<long> ascending) {
    QPoly p;
    for (long v : ascending) p.c.push_back(make_rational(v));
    p.trim();
    return p;
}

} // namespace

const std::vector<QPoly>& reference_alpha_table() {
    static const std::vector<QPoly> table = {
        QPoly(),                                    // unused slot 0
        poly_from_coeffs({1}),
        poly_from_coeffs({0, 1}),
        poly_from_coeffs({-1, 1, 1}),
        poly_from_coeffs({0, -2, 1, 2}),
        poly_from_coeffs({1, 0, -5, 0, 5}),
        poly_from_coeffs({-1, 4, 5, -15, -5, 12, 1}),
        poly_from_coeffs({0, -7, 7, 35, -35, -35, 28, 8}),
        poly_from_coeffs({2, 4, -32, -28, 161, -28, -168, 48, 38, 4}),
        poly_from_coeffs({-3, 6, 57, -53, -381, 504, 364, -606, -75, 146, 39, 3}),
        poly_from_coeffs({3, -25, -60, 280, 565, -2124, 310, 2880, -1185, -1255,
                          322, 240, 45, 5}),
    };
    return table;
}

const std::vector<QPoly>& reference_a_table() {
    static const std::vector<QPoly> table = {
        QPoly(),                                    // unused slot 0
        poly_from_coeffs({1}),
        poly_from_coeffs({1}),
        poly_from_coeffs({1}),
        poly_from_coeffs({2}),
        poly_from_coeffs({5}),
        poly_from_coeffs({17, 1}),
        poly_from_coeffs({69, 8}),
        poly_from_coeffs({334, 66, 4}),
        poly_from_coeffs({1855, 530, 63, 3}),
        poly_from_coeffs({11673, 4492, 840, 90, 5}),
    };
    return table;
}

QPoly necklace_poly(int r) {
    if (r < 1) throw DomainError("degree must be >= 1");
    QPoly acc;
    for (int d = 1; d <= r; ++d) {
        if (r % d) continue;
        long mu = moebius(r / d);
        if (mu) acc = acc + make_rational(mu) * QPoly::q(d);
    }
    // rational coefficients, but integer values at integers (necklace count)
    return make_rational(1, r) * acc;
}

QRatFun pochhammer_shifted(const QRatFun& a, int n) {
    if (n < 0) throw DomainError("Pochhammer length must be >= 0");
    QRatFun prod = QRatFun::from_int(1);
    for (int j = 0; j < n; ++j)
        prod = prod * (QRatFun::from_int(1) - a * QRatFun::q(j));
    return prod;
}

MSeries<QRatRing> oracle_commuting_matrix_series(int nmax) {
    if (nmax < 0) throw DomainError("series order must be >= 0");
    QRatRing R;
    MSeries<QRatRing> acc = series_one(R, 1, nmax);
    for (int i = 1; i <= nmax; ++i) {
        // q-exponential in the block size i: sum_k (q t^i)^k / (q^{-1})_k
        MSeries<QRatRing> factor = series_zero(R, 1, nmax);
        for (int k = 0; i * k <= nmax; ++k) {
            QRatFun coeff = ratfun_pow(QRatFun::q(1), k) /
                            q_pochhammer(QRatFun::q(-1), k);
            series_set(R, factor, {i * k}, coeff);
        }
        acc = series_mul(R, acc, factor);
    }
    return acc;
}

MSeries<QRatRing> oracle_matrix_series(int nmax) {
    if (nmax < 0) throw DomainError("series order must be >= 0");
    QRatRing R;
    MSeries<QRatRing> s = series_zero(R, 1, nmax);
    for (int n = 0; n <= nmax; ++n)
        series_set(R, s, {n},
                   QRatFun::from_int(1) / q_pochhammer(QRatFun::q(-1), n));
    return s;
}

MSeries<QRatRing> oracle_qbinomial_series(const QRatFun& a, int nmax) {
    if (nmax < 0) throw DomainError("series order must be >= 0");
    QRatRing R;
    MSeries<QRatRing> s = series_zero(R, 1, nmax);
    for (int n = 0; n <= nmax; ++n)
        series_set(R, s, {n},
                   pochhammer_shifted(a, n) / q_pochhammer(QRatFun::q(1), n));
    return s;
}

Int nilpotent_count_closed_form(uint64_t q, int n) {
    if (n < 0) throw DomainError("matrix size must be >= 0");
    return int_pow(Int(static_cast<unsigned long>(q)),
                   static_cast<unsigned long>(n) * n - n);
}

} // namespace stackcount
