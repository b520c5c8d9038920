#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stackcount/end_algebra.hpp"

using namespace stackcount;

namespace {

std::mt19937 rng(20260816);

std::vector<uint32_t> random_elem(const EndAlgebra& A, const FieldSpec& F) {
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(F.q - 1));
    std::vector<uint32_t> x(A.D);
    for (auto& v : x) v = pick(rng);
    return x;
}

std::vector<uint32_t> random_radical_elem(const EndAlgebra& A, const FieldSpec& F) {
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(F.q - 1));
    std::vector<uint32_t> x(A.D, 0);
    for (int b : A.rad_idx) x[b] = pick(rng);
    return x;
}

} // namespace

TEST_CASE("quiver text parsing") {
    Quiver q = parse_quiver("# two-vertex chain\nvertices 2\n\n1 2   # the arrow\n");
    CHECK(q.nv == 2);
    REQUIRE(q.arrows.size() == 1);
    CHECK(q.arrows[0] == std::pair<int, int>(0, 1));

    // multi-arrow text, repeated lines allowed
    Quiver k = parse_quiver("vertices 2\n1 2\n1 2\n");
    CHECK(k.arrows.size() == 2);

    CHECK_THROWS_AS(parse_quiver(""), ParseError);                    // no header
    CHECK_THROWS_AS(parse_quiver("1 2\nvertices 2\n"), ParseError);   // arrow first
    CHECK_THROWS_AS(parse_quiver("vertices 2\nvertices 2\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 0\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 2\n1\n"), ParseError);     // short arrow
    CHECK_THROWS_AS(parse_quiver("vertices 2\n1 2 3\n"), ParseError); // trailing
    CHECK_THROWS_AS(parse_quiver("vertices 2\n1 3\n"), ParseError);   // range
    CHECK_THROWS_AS(parse_quiver("vertices 2\n0 1\n"), ParseError);   // 1-based
    // oriented cycles are rejected up front
    CHECK_THROWS_AS(parse_quiver("vertices 2\n1 2\n2 1\n"), DomainError);
    CHECK_THROWS_AS(parse_quiver("vertices 1\n1 1\n"), DomainError);  // loop
}

TEST_CASE("built-in quiver shapes and topological order") {
    Quiver a3 = make_linear_quiver(3);
    CHECK(a3.nv == 3);
    REQUIRE(a3.arrows.size() == 2);
    CHECK(a3.arrows[0] == std::pair<int, int>(0, 1));
    CHECK(a3.arrows[1] == std::pair<int, int>(1, 2));
    CHECK(topological_order(a3) == std::vector<int>{0, 1, 2});

    Quiver k2 = make_kronecker(2);
    CHECK(k2.nv == 2);
    CHECK(k2.arrows.size() == 2);

    CHECK_THROWS_AS(make_linear_quiver(0), DomainError);
    CHECK_THROWS_AS(make_kronecker(0), DomainError);

    Quiver cyc;
    cyc.nv = 3;
    cyc.arrows = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(topological_order(cyc), DomainError);
}

TEST_CASE("path tables") {
    // chain 0 -> 1 -> 2: three trivial paths plus 0->1, 1->2, 0->2
    PathTable t = build_paths(make_linear_quiver(3));
    CHECK(t.total() == 6);
    CHECK(t.count(0, 0) == 1);
    CHECK(t.count(0, 1) == 1);
    CHECK(t.count(0, 2) == 1);
    CHECK(t.count(1, 2) == 1);
    CHECK(t.count(1, 0) == 0);
    CHECK(t.count(2, 0) == 0);

    for (int v = 0; v < 3; ++v) {
        int e = t.trivial[v];
        CHECK(t.src[e] == v);
        CHECK(t.dst[e] == v);
        CHECK(t.arrow_seq[e].empty());
        CHECK(t.concat[e][e] == e);
    }
    int p01 = t.arrow_path[0], p12 = t.arrow_path[1];
    int p02 = t.between[0][2][0];
    CHECK(t.concat[p01][p12] == p02);
    CHECK(t.concat[p12][p01] == -1);          // endpoints do not match
    CHECK(t.concat[t.trivial[0]][p01] == p01);
    CHECK(t.concat[p01][t.trivial[1]] == p01);

    // two parallel arrows: walks of length <= 1 only
    PathTable k = build_paths(make_kronecker(2));
    CHECK(k.total() == 4);
    CHECK(k.count(0, 1) == 2);
    CHECK(k.arrow_path[0] != k.arrow_path[1]);

    CHECK_THROWS_AS(build_paths(make_linear_quiver(3), 4), DomainError);
}

TEST_CASE("endomorphism algebra dimensions") {
    Quiver a2 = make_linear_quiver(2);

    // d = (1,1): upper-triangular 2x2, dim 3, radical dim 1
    EndAlgebra A = build_end_algebra(a2, {1, 1});
    CHECK(A.D == 3);
    CHECK(A.diag_dim() == 2);
    CHECK(A.rad_dim() == 1);

    // d = (2,1): dim = 4 + 1 + 2*1 = 7
    CHECK(build_end_algebra(a2, {2, 1}).D == 7);

    // d = (2,2): dim = 4 + 4 + 4 = 12, vertex spaces have dims 2 and 2+2
    EndAlgebra B = build_end_algebra(a2, {2, 2});
    CHECK(B.D == 12);
    CHECK(B.rad_dim() == 4);
    CHECK(B.vdim == std::vector<int>{2, 4});

    CHECK(build_end_algebra(a2, {0, 0}).D == 0);
    CHECK(build_end_algebra(a2, {1, 0}).D == 1);

    // two parallel arrows, d = (1,1): dim = 1 + 1 + 2
    EndAlgebra K = build_end_algebra(make_kronecker(2), {1, 1});
    CHECK(K.D == 4);
    CHECK(K.rad_dim() == 2);

    // projectives over the one-point quiver: plain matrix algebra
    CHECK(build_end_algebra(make_linear_quiver(1), {3}).D == 9);

    CHECK_THROWS_AS(build_end_algebra(a2, {1}), DomainError);
    CHECK_THROWS_AS(build_end_algebra(a2, {1, -1}), DomainError);
}

TEST_CASE("identity element and triangular support") {
    EndAlgebra A = build_end_algebra(make_linear_quiver(2), {2, 2});
    const FieldSpec& F = FieldSpec::get(3);
    auto one = alg_identity(A);

    auto amb = ambient_matrices(A, F, one);
    for (int v = 0; v < A.quiver.nv; ++v)
        CHECK(amb[v] == mat_identity(A.vdim[v]));
    auto blocks = pi_blocks(A, F, one);
    for (int v = 0; v < A.quiver.nv; ++v)
        CHECK(blocks[v] == mat_identity(A.dvec[v]));

    // identity is neutral
    auto x = random_elem(A, F);
    CHECK(alg_mul(A, F, one, x) == x);
    CHECK(alg_mul(A, F, x, one) == x);

    // no maps from the sink's projective back to the source's
    for (const auto& e : A.basis) CHECK(!(e.i == 1 && e.j == 0));
}

TEST_CASE("structure constants are associative") {
    for (const EndAlgebra& A : {build_end_algebra(make_linear_quiver(2), {2, 2}),
                                build_end_algebra(make_kronecker(2), {1, 1}),
                                build_end_algebra(make_linear_quiver(3), {1, 2, 1})}) {
        for (int a = 0; a < A.D; ++a)
            for (int b = 0; b < A.D; ++b)
                for (int c = 0; c < A.D; ++c) {
                    int ab = A.mult[a][b];
                    int bc = A.mult[b][c];
                    int lhs = ab < 0 ? -1 : A.mult[ab][c];
                    int rhs = bc < 0 ? -1 : A.mult[a][bc];
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("coordinate product matches the ambient matrix product") {
    std::vector<std::pair<Quiver, std::vector<int>>> cases = {
        {make_linear_quiver(2), {1, 1}},
        {make_linear_quiver(2), {2, 1}},
        {make_linear_quiver(2), {2, 2}},
        {make_linear_quiver(3), {1, 1, 1}},
        {make_kronecker(2), {1, 2}},
    };
    for (uint64_t q : {2, 3, 4}) {
        const FieldSpec& F = FieldSpec::get(q);
        for (const auto& [qu, d] : cases) {
            EndAlgebra A = build_end_algebra(qu, d);
            for (int trial = 0; trial < 6; ++trial) {
                auto x = random_elem(A, F), y = random_elem(A, F);
                auto xy = alg_mul(A, F, x, y);
                auto ax = ambient_matrices(A, F, x);
                auto ay = ambient_matrices(A, F, y);
                auto axy = ambient_matrices(A, F, xy);
                auto px = pi_blocks(A, F, x);
                auto py = pi_blocks(A, F, y);
                auto pxy = pi_blocks(A, F, xy);
                for (int v = 0; v < A.quiver.nv; ++v) {
                    // composition applies the right factor first
                    CHECK(axy[v] == mat_mul(F, ax[v], ay[v]));
                    // projection onto the vertex blocks is a homomorphism
                    CHECK(pxy[v] == mat_mul(F, px[v], py[v]));
                }
            }
        }
    }
}

TEST_CASE("arrow action commutes with endomorphisms") {
    std::vector<std::pair<Quiver, std::vector<int>>> cases = {
        {make_linear_quiver(2), {2, 2}},
        {make_linear_quiver(3), {1, 2, 1}},
        {make_kronecker(2), {2, 1}},
    };
    const FieldSpec& F = FieldSpec::get(5);
    for (const auto& [qu, d] : cases) {
        EndAlgebra A = build_end_algebra(qu, d);
        for (int trial = 0; trial < 8; ++trial) {
            auto x = random_elem(A, F);
            auto amb = ambient_matrices(A, F, x);
            for (size_t a = 0; a < qu.arrows.size(); ++a) {
                auto [u, w] = qu.arrows[a];
                FFMat S = arrow_matrix(A, static_cast<int>(a));
                CHECK(mat_mul(F, S, amb[u]) == mat_mul(F, amb[w], S));
            }
        }
    }
}

TEST_CASE("off-diagonal part is nilpotent") {
    const FieldSpec& F = FieldSpec::get(4);
    EndAlgebra A = build_end_algebra(make_linear_quiver(3), {1, 1, 1});

    // walks can be extended once: some product of two off-diagonal
    // elements survives ...
    bool some_nonzero = false;
    for (int b1 : A.rad_idx)
        for (int b2 : A.rad_idx)
            if (A.mult[b1][b2] >= 0) some_nonzero = true;
    CHECK(some_nonzero);

    // ... but every product of rad_dim + 1 of them dies
    for (const EndAlgebra& B : {build_end_algebra(make_linear_quiver(3), {1, 1, 1}),
                                build_end_algebra(make_linear_quiver(2), {2, 2}),
                                build_end_algebra(make_kronecker(2), {1, 1})}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto acc = random_radical_elem(B, F);
            for (int k = 0; k < B.rad_dim(); ++k)
                acc = alg_mul(B, F, acc, random_radical_elem(B, F));
            CHECK(std::all_of(acc.begin(), acc.end(),
                              [](uint32_t v) { return v == 0; }));
        }
    }
}

TEST_CASE("combinatorial basis agrees with the equivariant-map equations") {
    // nullspace of the intertwining constraints, solved over the rationals,
    // must reproduce the path basis exactly
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(2), {1, 1})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(2), {2, 1})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(2), {2, 2})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(2), {0, 2})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(3), {1, 1, 1})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(3), {1, 2, 1})));
    CHECK(verify_end_basis(build_end_algebra(make_kronecker(2), {1, 1})));
    CHECK(verify_end_basis(build_end_algebra(make_kronecker(2), {2, 2})));
    CHECK(verify_end_basis(build_end_algebra(make_kronecker(3), {1, 2})));
    CHECK(verify_end_basis(build_end_algebra(make_linear_quiver(1), {3})));
}
