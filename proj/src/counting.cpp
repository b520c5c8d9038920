#include "stackcount/counting.hpp"

#include <map>
#include <mutex>

namespace stackcount {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

Int int_from_u128(u128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    Int lo(static_cast<unsigned long>(v));
    return (hi << 64) + lo;
}

// q^e with a hard 2^62 ceiling so downstream u64/u128 arithmetic stays exact.
u64 upow_checked(u64 q, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (u64(1) << 62) / q)
            throw BudgetExceeded("element counts exceed the 2^62 fast-path bound");
        r *= q;
    }
    return r;
}

u64 mat_code(const FieldSpec& F, const FFMat& m) {
    u64 code = 0, mult = 1;
    for (uint32_t v : m.a) {
        code += v * mult;
        mult *= F.q;
    }
    return code;
}

FFMat mat_decode(const FieldSpec& F, int d, u64 code) {
    FFMat m(d, d);
    for (auto& v : m.a) {
        v = static_cast<uint32_t>(code % F.q);
        code /= F.q;
    }
    return m;
}

uint32_t field_generator(const FieldSpec& F) {
    if (F.k > 1) return F.generator;
    if (F.q == 2) return 1;
    std::vector<u64> primes;
    u64 n = F.q - 1;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        primes.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) primes.push_back(n);
    for (uint32_t g = 2; g < F.q; ++g) {
        bool ok = true;
        for (u64 l : primes)
            if (F.pow(g, (F.q - 1) / l) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw InternalCheckError("no generator mod p");
}

std::vector<std::pair<FFMat, FFMat>> gl_generators(const FieldSpec& F, int d) {
    std::vector<std::pair<FFMat, FFMat>> gens;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            for (uint32_t c = 1; c < F.q; ++c) {
                FFMat g = mat_identity(d), gi = mat_identity(d);
                g.at(i, j) = c;
                gi.at(i, j) = F.neg(c);
                gens.emplace_back(std::move(g), std::move(gi));
            }
        }
    if (d >= 1 && F.q > 2) {
        FFMat g = mat_identity(d), gi = mat_identity(d);
        uint32_t gamma = field_generator(F);
        g.at(0, 0) = gamma;
        gi.at(0, 0) = F.inv(gamma);
        gens.emplace_back(std::move(g), std::move(gi));
    }
    return gens;
}

} // namespace

ZType ztype_parse(const std::string& s) {
    if (s == "0" || s == "nilpotent") return ZType::nilpotent;
    if (s == "*" || s == "invertible") return ZType::invertible;
    if (s == "a" || s == "all") return ZType::all;
    throw ParseError("unknown element condition '" + s + "' (expected 0, *, or a)");
}

std::string ztype_name(ZType t) {
    switch (t) {
        case ZType::nilpotent: return "0";
        case ZType::invertible: return "*";
        case ZType::all: return "a";
    }
    throw InternalCheckError("bad type tag");
}

Int gl_order(uint64_t q, int d) {
    Int qd = int_pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(d));
    Int r(1), qi(1);
    for (int i = 0; i < d; ++i) {
        r *= qd - qi;
        qi *= static_cast<long>(q);
    }
    return r;
}

Int nilpotent_matrix_count(uint64_t q, int d) {
    return int_pow(Int(static_cast<unsigned long>(q)),
                   static_cast<unsigned long>(d) * d - d);
}

Int count_aut(const EndAlgebra& A, uint64_t q) {
    Int r(1);
    for (int d : A.dvec) r *= gl_order(q, d);
    return r * int_pow(Int(static_cast<unsigned long>(q)),
                       static_cast<unsigned long>(A.rad_dim()));
}

bool elem_is_invertible(const EndAlgebra& A, const FieldSpec& F,
                        const std::vector<uint32_t>& x) {
    for (const FFMat& b : pi_blocks(A, F, x))
        if (!mat_is_invertible(F, b)) return false;
    return true;
}

bool elem_is_nilpotent(const EndAlgebra& A, const FieldSpec& F,
                       const std::vector<uint32_t>& x) {
    for (const FFMat& b : pi_blocks(A, F, x))
        if (!mat_is_nilpotent(F, b)) return false;
    return true;
}

bool elem_has_type(const EndAlgebra& A, const FieldSpec& F,
                   const std::vector<uint32_t>& x, ZType t) {
    switch (t) {
        case ZType::nilpotent: return elem_is_nilpotent(A, F, x);
        case ZType::invertible: return elem_is_invertible(A, F, x);
        case ZType::all: return true;
    }
    throw InternalCheckError("bad type tag");
}

bool elem_has_type_ambient(const EndAlgebra& A, const FieldSpec& F,
                           const std::vector<uint32_t>& x, ZType t) {
    if (t == ZType::all) return true;
    for (const FFMat& m : ambient_matrices(A, F, x)) {
        if (t == ZType::invertible && !mat_is_invertible(F, m)) return false;
        if (t == ZType::nilpotent && !mat_is_nilpotent(F, m)) return false;
    }
    return true;
}

const std::vector<ConjClass>& matrix_conj_classes(const FieldSpec& F, int d,
                                                  uint64_t budget) {
    static std::mutex mu;
    static std::map<std::pair<uint64_t, int>, std::vector<ConjClass>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({F.q, d});
    if (it != cache.end()) return it->second;

    std::vector<ConjClass> classes;
    if (d == 0) {
        classes.push_back({FFMat(0, 0), 1, true, true});
    } else if (d == 1) {
        for (uint32_t a = 0; a < F.q; ++a)
            classes.push_back({mat_decode(F, 1, a), 1, a != 0, a == 0});
    } else {
        u64 total = 1;
        for (int i = 0; i < d * d; ++i) {
            if (total > budget / F.q || total > (u64(1) << 26) / F.q)
                throw BudgetExceeded("matrix class enumeration over budget");
            total *= F.q;
        }
        auto gens = gl_generators(F, d);
        std::vector<bool> visited(total, false);
        std::vector<u64> work;
        for (u64 start = 0; start < total; ++start) {
            if (visited[start]) continue;
            visited[start] = true;
            work.assign(1, start);
            u64 size = 0;
            while (!work.empty()) {
                u64 code = work.back();
                work.pop_back();
                ++size;
                FFMat m = mat_decode(F, d, code);
                for (const auto& [g, gi] : gens) {
                    u64 c2 = mat_code(F, mat_mul(F, mat_mul(F, g, m), gi));
                    if (!visited[c2]) {
                        visited[c2] = true;
                        work.push_back(c2);
                    }
                }
            }
            FFMat rep = mat_decode(F, d, start);
            classes.push_back({rep, size, mat_is_invertible(F, rep),
                               mat_is_nilpotent(F, rep)});
        }
    }
    return cache.emplace(std::make_pair(F.q, d), std::move(classes)).first->second;
}

namespace {

/* One outer sweep: x runs over diagonal-class representatives times radical
 * fibers, restricted to the outer type; returns the commuting-y counts for
 * the requested inner types.  Everything accumulates in 128-bit integers,
 * exact because counts are bounded by q^(2 D) <= 2^124. */
std::array<Int, 3> comm_row(const EndAlgebra& A, const FieldSpec& F,
                            ZType outer, const std::array<bool, 3>& need,
                            const CountOptions& opts) {
    const u64 q = F.q;
    const int D = A.D, R = A.rad_dim(), nd = A.diag_dim(), nv = A.quiver.nv;

    std::vector<u64> pw(D + 1, 1);
    for (int i = 1; i <= D; ++i) pw[i] = upow_checked(q, i);
    if (R > 0 && pw[R] > opts.budget)
        throw BudgetExceeded("radical fiber enumeration over budget");

    std::vector<const std::vector<ConjClass>*> cls(nv);
    for (int v = 0; v < nv; ++v)
        cls[v] = &matrix_conj_classes(F, A.dvec[v], opts.budget);

    const bool want_inner_diag = need[0] || need[1];
    // closed forms for the full diagonal algebra
    u64 full_units = 1, full_nilp = 1;
    {
        int sum_d = 0;
        for (int v = 0; v < nv; ++v) {
            int d = A.dvec[v];
            sum_d += d;
            for (int i = 0; i < d; ++i) full_units *= pw[d] - pw[i];
        }
        full_nilp = pw[nd - sum_d];
    }

    // pivot-row lookup reused across states
    std::vector<int> pivot_row;
    std::vector<int> pivots;
    FFMat ad(D, D);
    FFMat proj;
    std::map<std::vector<uint32_t>, std::pair<u64, u64>> wcache;
    std::vector<uint32_t> wkey;
    std::vector<uint32_t> welem;
    std::vector<FFMat> wblocks;
    for (int v = 0; v < nv; ++v) wblocks.emplace_back(A.dvec[v], A.dvec[v]);

    std::array<u128, 3> grand{0, 0, 0};

    std::vector<size_t> ci(nv, 0);
    std::vector<uint32_t> coords(A.D, 0);
    std::vector<uint32_t> digits(R, 0);

    while (true) {
        bool sigma_inv = true, sigma_nil = true;
        u64 csize = 1;
        for (int v = 0; v < nv; ++v) {
            const ConjClass& c = (*cls[v])[ci[v]];
            sigma_inv = sigma_inv && c.invertible;
            sigma_nil = sigma_nil && c.nilpotent;
            csize *= c.size;
        }
        bool take = outer == ZType::all ||
                    (outer == ZType::invertible && sigma_inv) ||
                    (outer == ZType::nilpotent && sigma_nil);
        if (take) {
            std::fill(coords.begin(), coords.end(), 0);
            for (int v = 0; v < nv; ++v) {
                const FFMat& rep = (*cls[v])[ci[v]].rep;
                for (int c = 0; c < A.dvec[v]; ++c)
                    for (int cp = 0; cp < A.dvec[v]; ++cp)
                        coords[A.pi_index[v][c][cp]] = rep.at(c, cp);
            }
            std::fill(digits.begin(), digits.end(), 0);
            std::array<u128, 3> fib{0, 0, 0};
            u64 fiber = R > 0 ? pw[R] : 1;
            for (u64 state = 0; state < fiber; ++state) {
                // centralizer of x: kernel of y -> x y - y x in coordinates
                std::fill(ad.a.begin(), ad.a.end(), 0u);
                for (int a = 0; a < D; ++a) {
                    uint32_t xa = coords[a];
                    if (!xa) continue;
                    const int* row = A.mult[a].data();
                    for (int b = 0; b < D; ++b) {
                        if (row[b] >= 0) {
                            uint32_t& s = ad.at(row[b], b);
                            s = F.add(s, xa);
                        }
                        if (A.mult[b][a] >= 0) {
                            uint32_t& s = ad.at(A.mult[b][a], b);
                            s = F.sub(s, xa);
                        }
                    }
                }
                int rank = mat_rref_inplace(F, ad, pivots);
                int dimZ = D - rank;
                if (need[2]) fib[2] += pw[dimZ];
                if (want_inner_diag) {
                    pivot_row.assign(D, -1);
                    for (int i = 0; i < rank; ++i) pivot_row[pivots[i]] = i;
                    // project the kernel basis onto the diagonal coordinates
                    proj = FFMat(dimZ, nd);
                    {
                        int r = 0;
                        for (int j = 0; j < D; ++j) {
                            if (pivot_row[j] >= 0) continue;
                            for (int t = 0; t < nd; ++t) {
                                int dj = A.diag_idx[t];
                                uint32_t val = 0;
                                if (dj == j) val = 1;
                                else if (pivot_row[dj] >= 0)
                                    val = F.neg(ad.at(pivot_row[dj], j));
                                proj.at(r, t) = val;
                            }
                            ++r;
                        }
                    }
                    std::vector<int> wpiv;
                    int w = mat_rref_inplace(F, proj, wpiv);
                    int kerdim = dimZ - w;
                    u64 nnil = 0, nuni = 0;
                    if (w == nd) {
                        nnil = full_nilp;
                        nuni = full_units;
                    } else {
                        wkey.assign(1, static_cast<uint32_t>(w));
                        for (int i = 0; i < w; ++i)
                            for (int t = 0; t < nd; ++t)
                                wkey.push_back(proj.at(i, t));
                        auto hit = wcache.find(wkey);
                        if (hit != wcache.end()) {
                            nnil = hit->second.first;
                            nuni = hit->second.second;
                        } else {
                            if (w > 0 && pw[w] > opts.budget)
                                throw BudgetExceeded(
                                    "diagonal subspace enumeration over budget");
                            u64 wtotal = pw[w];
                            std::vector<uint32_t> wd(w, 0);
                            welem.assign(nd, 0);
                            for (u64 s = 0; s < wtotal; ++s) {
                                for (int t = 0; t < nd; ++t) {
                                    uint32_t acc = 0;
                                    for (int i = 0; i < w; ++i)
                                        if (wd[i])
                                            acc = F.add(acc, F.mul(wd[i], proj.at(i, t)));
                                    welem[t] = acc;
                                }
                                for (int v = 0; v < nv; ++v)
                                    for (size_t e = 0; e < wblocks[v].a.size(); ++e)
                                        wblocks[v].a[e] = 0;
                                for (int t = 0; t < nd; ++t) {
                                    const auto& be = A.basis[A.diag_idx[t]];
                                    wblocks[be.i].at(be.c, be.cp) = welem[t];
                                }
                                bool inv = true, nil = true;
                                for (int v = 0; v < nv && (inv || nil); ++v) {
                                    if (inv && !mat_is_invertible(F, wblocks[v])) inv = false;
                                    if (nil && !mat_is_nilpotent(F, wblocks[v])) nil = false;
                                }
                                if (nil) ++nnil;
                                if (inv) ++nuni;
                                for (int i = 0; i < w; ++i) {
                                    if (++wd[i] < q) break;
                                    wd[i] = 0;
                                }
                            }
                            wcache.emplace(wkey, std::make_pair(nnil, nuni));
                        }
                    }
                    if (need[0]) fib[0] += pw[kerdim] * nnil;
                    if (need[1]) fib[1] += pw[kerdim] * nuni;
                }
                // next radical fiber point
                for (int i = 0; i < R; ++i) {
                    uint32_t& dg = digits[i];
                    if (++dg < q) { coords[A.rad_idx[i]] = dg; break; }
                    dg = 0;
                    coords[A.rad_idx[i]] = 0;
                }
            }
            for (int s = 0; s < 3; ++s)
                if (need[s]) grand[s] += static_cast<u128>(csize) * fib[s];
        }
        // next class tuple
        int v = 0;
        for (; v < nv; ++v) {
            if (++ci[v] < cls[v]->size()) break;
            ci[v] = 0;
        }
        if (v == nv) break;
    }

    return {int_from_u128(grand[0]), int_from_u128(grand[1]),
            int_from_u128(grand[2])};
}

int ztype_rarity(ZType t) { return static_cast<int>(t); }

} // namespace

Int count_commuting(const EndAlgebra& A, const FieldSpec& F, ZType s1,
                    ZType s2, const CountOptions& opts) {
    // pairs are symmetric; put the rarer condition outside
    ZType outer = s1, inner = s2;
    if (ztype_rarity(s2) < ztype_rarity(s1)) std::swap(outer, inner);
    std::array<bool, 3> need{false, false, false};
    need[static_cast<int>(inner)] = true;
    return comm_row(A, F, outer, need, opts)[static_cast<int>(inner)];
}

std::array<std::array<Int, 3>, 3> count_commuting_table(
    const EndAlgebra& A, const FieldSpec& F, const CountOptions& opts) {
    std::array<std::array<Int, 3>, 3> t;
    auto rowN = comm_row(A, F, ZType::nilpotent, {true, true, true}, opts);
    auto rowI = comm_row(A, F, ZType::invertible, {true, true, true}, opts);
    auto rowA = comm_row(A, F, ZType::all, {false, false, true}, opts);
    t[0] = {rowN[0], rowN[1], rowN[2]};
    t[1] = {rowI[0], rowI[1], rowI[2]};
    t[2] = {rowN[2], rowI[2], rowA[2]};   // (a,0) = (0,a), (a,*) = (*,a)
    return t;
}

Int naive_count_commuting(const EndAlgebra& A, const FieldSpec& F, ZType s1,
                          ZType s2, uint64_t budget) {
    const u64 q = F.q;
    u64 total = 1;
    for (int i = 0; i < 2 * A.D; ++i) {
        if (total > budget / q)
            throw BudgetExceeded("pairwise enumeration over budget");
        total *= q;
    }
    u64 n = 1;
    for (int i = 0; i < A.D; ++i) n *= q;

    std::vector<std::vector<FFMat>> amb(n);
    std::vector<char> okx(n), oky(n);
    std::vector<uint32_t> coords(A.D);
    for (u64 e = 0; e < n; ++e) {
        u64 c = e;
        for (int i = 0; i < A.D; ++i) {
            coords[i] = static_cast<uint32_t>(c % q);
            c /= q;
        }
        amb[e] = ambient_matrices(A, F, coords);
        auto type_ok = [&](ZType t) {
            if (t == ZType::all) return true;
            for (const FFMat& m : amb[e]) {
                if (t == ZType::invertible && !mat_is_invertible(F, m)) return false;
                if (t == ZType::nilpotent && !mat_is_nilpotent(F, m)) return false;
            }
            return true;
        };
        okx[e] = type_ok(s1);
        oky[e] = type_ok(s2);
    }

    u128 count = 0;
    for (u64 x = 0; x < n; ++x) {
        if (!okx[x]) continue;
        for (u64 y = 0; y < n; ++y) {
            if (!oky[y]) continue;
            bool comm = true;
            for (int v = 0; v < A.quiver.nv && comm; ++v)
                comm = mat_mul(F, amb[x][v], amb[y][v]) ==
                       mat_mul(F, amb[y][v], amb[x][v]);
            if (comm) ++count;
        }
    }
    return int_from_u128(count);
}

} // namespace stackcount
