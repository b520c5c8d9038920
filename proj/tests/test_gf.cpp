#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stackcount/gf.hpp"

using namespace stackcount;

namespace {

std::mt19937_64 rng(20260816u);

uint32_t rand_elem(const FieldSpec& F) {
    std::uniform_int_distribution<uint64_t> d(0, F.q - 1);
    return static_cast<uint32_t>(d(rng));
}

FFMat rand_mat(const FieldSpec& F, int r, int c) {
    FFMat m(r, c);
    for (auto& v : m.a) v = rand_elem(F);
    return m;
}

} // namespace

TEST_CASE("deterministic moduli for extension fields") {
    // Least constant-first coefficient tuples: the usual small-field choices.
    CHECK(FieldSpec::get(4).modulus == std::vector<uint32_t>{1, 1, 1});      // x^2+x+1
    CHECK(FieldSpec::get(8).modulus == std::vector<uint32_t>{1, 0, 1, 1});   // x^3+x^2+1
    CHECK(FieldSpec::get(9).modulus == std::vector<uint32_t>{1, 0, 1});      // x^2+1
    CHECK(FieldSpec::get(16).modulus == std::vector<uint32_t>{1, 0, 0, 1, 1});
    CHECK(FieldSpec::get(25).modulus == std::vector<uint32_t>{1, 1, 1});     // x^2+x+1
    CHECK(FieldSpec::get(7).modulus.empty());   // prime fields carry no modulus

    // construction is reproducible
    FieldSpec a = FieldSpec::make(81), b = FieldSpec::make(81);
    CHECK(a.modulus == b.modulus);
    CHECK(a.generator == b.generator);
    CHECK(a.exp_tab == b.exp_tab);
}

TEST_CASE("field sizes are validated") {
    CHECK_THROWS_AS(FieldSpec::make(0), DomainError);
    CHECK_THROWS_AS(FieldSpec::make(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::make(6), DomainError);
    CHECK_THROWS_AS(FieldSpec::make(12), DomainError);
    CHECK_THROWS_AS(FieldSpec::make(uint64_t(1) << 21), DomainError);
    CHECK_NOTHROW(FieldSpec::make(4));  // prime power, not prime
}

TEST_CASE("field axioms, exhaustive on tiny fields") {
    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec& F = FieldSpec::get(q);
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, F.q) == a);   // Frobenius fixed points: x^q = x
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.mul(a, b) == F.mul_reference(a, b));
                for (uint32_t c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
        // characteristic: p ones sum to zero, no fewer
        uint32_t s = 0;
        for (uint32_t i = 1; i < F.p; ++i) {
            s = F.add(s, 1);
            CHECK(s != 0);
        }
        CHECK(F.add(s, 1) == 0);
    }
}

TEST_CASE("field axioms, sampled on larger fields") {
    for (uint64_t q : {16, 25, 27, 49, 64, 81, 125, 128, 243, 256,
                       343, 625, 1024, 2401, 65536}) {
        const FieldSpec& F = FieldSpec::get(q);
        REQUIRE(F.q == q);
        for (int t = 0; t < 120; ++t) {
            uint32_t a = rand_elem(F), b = rand_elem(F), c = rand_elem(F);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(a, b) == F.mul_reference(a, b));
            CHECK(F.sub(F.add(a, b), b) == a);
            if (b) CHECK(F.mul(F.mul(a, b), F.inv(b)) == a);
            // Frobenius is additive
            CHECK(F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p)));
            CHECK(F.pow(a, F.q) == a);
        }
        // generator really has full multiplicative order
        if (F.k > 1) {
            CHECK(F.exp_tab.size() == q - 1);
            CHECK(F.pow(F.generator, q - 1) == 1);
            for (uint64_t l : {2, 3, 5, 7, 11, 13})
                if ((q - 1) % l == 0)
                    CHECK(F.pow(F.generator, (q - 1) / l) != 1);
        }
    }
}

TEST_CASE("integer reduction into the prime subfield") {
    const FieldSpec& F = FieldSpec::get(49);
    CHECK(F.from_int(0) == 0);
    CHECK(F.from_int(8) == 1);
    CHECK(F.from_int(-1) == 6);
    CHECK(F.from_int(-15) == 6);
    CHECK(F.add(F.from_int(3), F.from_int(4)) == 0);
}

TEST_CASE("row reduction, rank, and kernels") {
    const FieldSpec& F2 = FieldSpec::get(2);
    FFMat m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    CHECK(mat_rank(F2, m) == 1);
    auto ns = mat_nullspace(F2, m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<uint32_t>{1, 1});

    // rank-nullity on random matrices over a few fields
    for (uint64_t q : {2, 3, 4, 9, 25}) {
        const FieldSpec& F = FieldSpec::get(q);
        for (int t = 0; t < 25; ++t) {
            FFMat a = rand_mat(F, 4, 6);
            int rk = mat_rank(F, a);
            auto basis = mat_nullspace(F, a);
            CHECK(rk + static_cast<int>(basis.size()) == 6);
            for (const auto& v : basis) {
                FFMat col(6, 1);
                for (int i = 0; i < 6; ++i) col.at(i, 0) = v[i];
                CHECK(mat_is_zero(mat_mul(F, a, col)));
            }
        }
    }

    // reduced echelon form is a projection: applying it twice changes nothing
    const FieldSpec& F7 = FieldSpec::get(7);
    FFMat a = rand_mat(F7, 5, 5);
    std::vector<int> piv;
    mat_rref_inplace(F7, a, piv);
    FFMat b = a;
    std::vector<int> piv2;
    mat_rref_inplace(F7, b, piv2);
    CHECK(a == b);
    CHECK(piv == piv2);
}

TEST_CASE("inverses and nilpotency") {
    for (uint64_t q : {2, 5, 9, 49}) {
        const FieldSpec& F = FieldSpec::get(q);
        for (int t = 0; t < 20; ++t) {
            FFMat m = rand_mat(F, 3, 3);
            if (!mat_is_invertible(F, m)) {
                CHECK_THROWS_AS(mat_inverse(F, m), DomainError);
                continue;
            }
            CHECK(mat_mul(F, m, mat_inverse(F, m)) == mat_identity(3));
        }

        // strictly upper-triangular matrices are nilpotent; units are not
        FFMat u(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) u.at(i, j) = rand_elem(F);
        CHECK(mat_is_nilpotent(F, u));
        CHECK_FALSE(mat_is_nilpotent(F, mat_identity(4)));

        // shift matrix: nilpotent of index exactly n
        FFMat s(4, 4);
        for (int i = 0; i + 1 < 4; ++i) s.at(i, i + 1) = 1;
        FFMat s3 = mat_mul(F, mat_mul(F, s, s), s);
        CHECK_FALSE(mat_is_zero(s3));
        CHECK(mat_is_nilpotent(F, s));
    }
    CHECK(mat_is_nilpotent(FieldSpec::get(3), FFMat(0, 0)));
}
