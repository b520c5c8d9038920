#include "stackcount/alpha.hpp"

#include <algorithm>
#include <numeric>

#include "stackcount/gf.hpp"
#include "stackcount/hua.hpp"

namespace stackcount {

namespace {

using u128 = unsigned __int128;

Int int_from_u128(u128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    Int lo(static_cast<unsigned long>(v));
    return (hi << 64) + lo;
}

uint64_t upow_checked(uint64_t b, int e, const char* what) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (uint64_t(1) << 62) / b) throw BudgetExceeded(what);
        r *= b;
    }
    return r;
}

/* Positions of the strict upper triangle, row-major: p <-> (pi[p], pj[p]),
 * with pos(i,j) the inverse.  The commutator map ad_u acts on this basis:
 * for column (k,l), (uv - vu) picks up +u_(i,k) in row (i,l) for i < k and
 * -u_(l,j) in row (k,j) for j > l; the two families never hit the same row,
 * so each matrix entry receives at most one contribution. */
struct Positions {
    int n = 0, N = 0;
    std::vector<int> pi, pj;
    std::vector<std::vector<int>> pos;

    explicit Positions(int n_) : n(n_), N(n_ * (n_ - 1) / 2), pos(n_, std::vector<int>(n_, -1)) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pos[i][j] = static_cast<int>(pi.size());
                pi.push_back(i);
                pj.push_back(j);
            }
    }
};

// rank of ad_u over F_2, rows as bitmasks (needs N <= 63)
int ad_rank_gf2(const Positions& P, const std::vector<uint32_t>& u) {
    std::vector<uint64_t> rows(P.N, 0);
    for (int c = 0; c < P.N; ++c) {
        int k = P.pi[c], l = P.pj[c];
        for (int i = 0; i < k; ++i)
            if (u[P.pos[i][k]]) rows[P.pos[i][l]] |= uint64_t(1) << c;
        for (int j = l + 1; j < P.n; ++j)
            if (u[P.pos[l][j]]) rows[P.pos[k][j]] ^= uint64_t(1) << c;
    }
    int rank = 0;
    for (int c = 0; c < P.N; ++c) {
        int piv = -1;
        for (int r = rank; r < P.N; ++r)
            if (rows[r] >> c & 1) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < P.N; ++r)
            if (r != rank && (rows[r] >> c & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

int ad_rank(const Positions& P, const FieldSpec& F, const std::vector<uint32_t>& u,
            FFMat& ad, std::vector<int>& pivots) {
    if (F.q == 2) return ad_rank_gf2(P, u);
    std::fill(ad.a.begin(), ad.a.end(), 0);
    for (int c = 0; c < P.N; ++c) {
        int k = P.pi[c], l = P.pj[c];
        for (int i = 0; i < k; ++i) {
            uint32_t x = u[P.pos[i][k]];
            if (x) ad.at(P.pos[i][l], c) = x;
        }
        for (int j = l + 1; j < P.n; ++j) {
            uint32_t x = u[P.pos[l][j]];
            if (x) ad.at(P.pos[k][j], c) = F.neg(x);
        }
    }
    return mat_rref_inplace(F, ad, pivots);
}

// plain Burnside sum: all q^N strictly upper u, weight q^(dim ker ad_u)
Int strict_pairs_plain(const Positions& P, const FieldSpec& F, uint64_t budget) {
    uint64_t states = upow_checked(F.q, P.N, "triangular pair enumeration overflows");
    if (states > budget) throw BudgetExceeded("triangular pair enumeration exceeds budget");
    upow_checked(F.q, P.N, "centralizer weight overflows");   // q^dimZ fits u64

    std::vector<uint32_t> u(P.N, 0);
    FFMat ad(P.N, P.N);
    std::vector<int> pivots;
    u128 total = 0;
    while (true) {
        int rank = ad_rank(P, F, u, ad, pivots);
        total += upow_checked(F.q, P.N - rank, "centralizer weight overflows");
        int t = 0;
        while (t < P.N && u[t] == F.q - 1) u[t++] = 0;
        if (t == P.N) break;
        ++u[t];
    }
    return int_from_u128(total);
}

/* Torus regrouping.  Conjugation by diag(t_1..t_n) scales u_(i,j) by
 * t_i / t_j, so an orbit is determined by the support plus one value per
 * non-forest edge (forest edges rescale to 1 one at a time); a support
 * whose edge graph has c components contributes (q-1)^(n-c) elements per
 * orbit representative. */
Int strict_pairs_torus(const Positions& P, const FieldSpec& F, uint64_t budget) {
    if (P.N >= 26) throw BudgetExceeded("support enumeration exceeds budget");
    upow_checked(F.q, P.N, "centralizer weight overflows");
    uint64_t qm1 = F.q - 1;

    std::vector<uint32_t> u(P.N, 0);
    FFMat ad(P.N, P.N);
    std::vector<int> pivots;
    std::vector<int> dsu(P.n), free_pos;
    u128 total = 0;
    uint64_t processed = 0;

    for (uint32_t s = 0; s < (uint32_t(1) << P.N); ++s) {
        std::iota(dsu.begin(), dsu.end(), 0);
        auto find = [&](int x) {
            while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
            return x;
        };
        free_pos.clear();
        int comp = P.n;
        for (int p = 0; p < P.N; ++p) {
            u[p] = 0;
            if (!(s >> p & 1)) continue;
            int a = find(P.pi[p]), b = find(P.pj[p]);
            if (a == b) {
                free_pos.push_back(p);   // closes a cycle: its value survives
            } else {
                dsu[a] = b;
                --comp;
                u[p] = 1;                // forest edge, rescaled to 1
            }
        }
        uint64_t reps = upow_checked(qm1, static_cast<int>(free_pos.size()),
                                     "orbit representative count overflows");
        processed += reps;
        if (processed > budget) throw BudgetExceeded("orbit enumeration exceeds budget");
        u128 orbit = 0;
        std::vector<uint32_t> vals(free_pos.size(), 1);
        while (true) {
            for (size_t i = 0; i < free_pos.size(); ++i) u[free_pos[i]] = vals[i];
            int rank = ad_rank(P, F, u, ad, pivots);
            orbit += upow_checked(F.q, P.N - rank, "centralizer weight overflows");
            size_t t = 0;
            while (t < vals.size() && vals[t] == qm1) vals[t++] = 1;
            if (t == vals.size()) break;
            ++vals[t];
        }
        total += orbit * upow_checked(qm1, P.n - comp, "orbit size overflows");
    }
    return int_from_u128(total);
}

} // namespace

Int strict_commuting_pairs(int n, uint64_t q, const AlphaOptions& opts) {
    if (n < 1) throw DomainError("matrix size must be >= 1");
    const FieldSpec& F = FieldSpec::get(q);
    Positions P(n);
    if (P.N == 0) return Int(1);
    if (P.N > 62) throw BudgetExceeded("matrix size out of range");
    return opts.torus_reduction ? strict_pairs_torus(P, F, opts.budget)
                                : strict_pairs_plain(P, F, opts.budget);
}

Int alpha_value(int n, uint64_t q, const AlphaOptions& opts) {
    Int pairs = strict_commuting_pairs(n, q, opts);
    int N = n * (n - 1) / 2;
    Int scale = int_pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(N));
    Int quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), pairs.get_mpz_t(), scale.get_mpz_t());
    if (rem != 0)
        throw InternalCheckError("triangular pair count is not divisible by the torus order");
    return quo;
}

AlphaFit alpha_invariants(int n, const std::vector<long long>& fields,
                          const AlphaOptions& opts) {
    if (fields.size() < 2) throw DomainError("need at least two sample fields");
    AlphaFit fit;
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long q : fields) {
        Int v = alpha_value(n, static_cast<uint64_t>(q), opts);
        fit.samples.emplace_back(q, v);
        pts.emplace_back(Rational(static_cast<long>(q)), Rational(v));
    }
    fit.poly = lagrange_interpolate(pts);
    fit.spare_points = static_cast<int>(fields.size()) - (fit.poly.degree() + 1);
    return fit;
}

QPoly a_from_alpha(const std::vector<QPoly>& alpha, int n) {
    if (n < 1) throw DomainError("index must be >= 1");
    if (static_cast<int>(alpha.size()) <= n)
        throw DomainError("alpha table too short");

    QPoly acc;   // zero
    for (const Partition& la : partitions(n)) {
        int len = static_cast<int>(la.size());
        // #set partitions of type la: n! / (prod la_i! * prod m_j!)
        Int cnt;
        mpz_fac_ui(cnt.get_mpz_t(), static_cast<unsigned long>(n));
        Int f;
        for (size_t i = 0; i < la.size();) {
            size_t j = i;
            while (j < la.size() && la[j] == la[i]) ++j;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(la[i]));
            for (size_t r = i; r < j; ++r) cnt /= f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
            cnt /= f;
            i = j;
        }
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(len - 1));
        Int w = cnt * f;
        if (len % 2 == 0) w = -w;

        QPoly term = QPoly::from_int(1);
        for (int part : la) term = term * alpha[part];
        acc = acc + term * QPoly(Rational(w));
    }

    QPoly qm1 = QPoly::q(1) - QPoly::from_int(1);
    QPoly denom = QPoly::from_int(1);
    for (int i = 1; i < n; ++i) denom = denom * qm1;
    QPoly quo, rem;
    poly_divrem(acc, denom, quo, rem);
    if (!rem.is_zero())
        throw InternalCheckError("set-partition inversion left a remainder");
    return quo;
}

} // namespace stackcount
