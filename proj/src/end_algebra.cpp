#include "stackcount/end_algebra.hpp"

#include <algorithm>

#include "stackcount/rational.hpp"

namespace stackcount {

EndAlgebra build_end_algebra(const Quiver& q, const std::vector<int>& dvec) {
    if (static_cast<int>(dvec.size()) != q.nv)
        throw DomainError("dimension vector length does not match the quiver");
    for (int d : dvec)
        if (d < 0) throw DomainError("dimension vector entries must be >= 0");

    EndAlgebra A;
    A.quiver = q;
    A.paths = build_paths(q);
    A.dvec = dvec;

    std::map<std::tuple<int, int, int, int, int>, int> index_of;
    for (int i = 0; i < q.nv; ++i)
        for (int c = 0; c < dvec[i]; ++c)
            for (int j = 0; j < q.nv; ++j)
                for (int cp = 0; cp < dvec[j]; ++cp)
                    for (int pid : A.paths.between[i][j]) {
                        index_of[{i, c, j, cp, pid}] = A.D;
                        A.basis.push_back({i, c, j, cp, pid});
                        ++A.D;
                    }

    A.pi_index.assign(q.nv, {});
    for (int v = 0; v < q.nv; ++v)
        A.pi_index[v].assign(dvec[v], std::vector<int>(dvec[v], -1));
    for (int b = 0; b < A.D; ++b) {
        const auto& e = A.basis[b];
        if (e.i == e.j) {
            A.diag_idx.push_back(b);
            A.pi_index[e.i][e.c][e.cp] = b;
            if (e.c == e.cp) A.identity_idx.push_back(b);
        } else {
            A.rad_idx.push_back(b);
        }
    }

    A.mult.assign(A.D, std::vector<int>(A.D, -1));
    for (int a = 0; a < A.D; ++a) {
        const auto& x = A.basis[a];
        for (int b = 0; b < A.D; ++b) {
            const auto& y = A.basis[b];
            if (x.j != y.i || x.cp != y.c) continue;
            int pid = A.paths.concat[x.path][y.path];
            A.mult[a][b] = index_of.at({x.i, x.c, y.j, y.cp, pid});
        }
    }

    A.vdim.assign(q.nv, 0);
    A.vbasis.assign(q.nv, {});
    A.vpos.assign(q.nv, {});
    for (int v = 0; v < q.nv; ++v) {
        for (int i = 0; i < q.nv; ++i)
            for (int c = 0; c < dvec[i]; ++c)
                for (int pid : A.paths.between[i][v]) {
                    A.vpos[v][{i, c, pid}] = static_cast<int>(A.vbasis[v].size());
                    A.vbasis[v].push_back({i, c, pid});
                }
        A.vdim[v] = static_cast<int>(A.vbasis[v].size());
    }
    return A;
}

std::vector<uint32_t> alg_mul(const EndAlgebra& A, const FieldSpec& F,
                              const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y) {
    std::vector<uint32_t> out(A.D, 0);
    for (int a = 0; a < A.D; ++a) {
        if (!x[a]) continue;
        const int* row = A.mult[a].data();
        for (int b = 0; b < A.D; ++b) {
            if (!y[b] || row[b] < 0) continue;
            uint32_t& slot = out[row[b]];
            slot = F.add(slot, F.mul(x[a], y[b]));
        }
    }
    return out;
}

std::vector<uint32_t> alg_identity(const EndAlgebra& A) {
    std::vector<uint32_t> e(A.D, 0);
    for (int b : A.identity_idx) e[b] = 1;
    return e;
}

std::vector<FFMat> pi_blocks(const EndAlgebra& A, const FieldSpec& F,
                             const std::vector<uint32_t>& x) {
    (void)F;
    std::vector<FFMat> blocks;
    blocks.reserve(A.quiver.nv);
    for (int v = 0; v < A.quiver.nv; ++v) {
        int d = A.dvec[v];
        FFMat m(d, d);
        for (int c = 0; c < d; ++c)
            for (int cp = 0; cp < d; ++cp)
                m.at(c, cp) = x[A.pi_index[v][c][cp]];
        blocks.push_back(std::move(m));
    }
    return blocks;
}

std::vector<FFMat> ambient_matrices(const EndAlgebra& A, const FieldSpec& F,
                                    const std::vector<uint32_t>& x) {
    std::vector<FFMat> mats;
    mats.reserve(A.quiver.nv);
    for (int v = 0; v < A.quiver.nv; ++v) mats.emplace_back(A.vdim[v], A.vdim[v]);
    for (int b = 0; b < A.D; ++b) {
        if (!x[b]) continue;
        const auto& e = A.basis[b];
        // acts on P_v by p |-> rho p for each path p: j -> v
        for (int v = 0; v < A.quiver.nv; ++v)
            for (int pid : A.paths.between[e.j][v]) {
                int target = A.paths.concat[e.path][pid];
                int row = A.vpos[v].at({e.i, e.c, target});
                int col = A.vpos[v].at({e.j, e.cp, pid});
                uint32_t& slot = mats[v].at(row, col);
                slot = F.add(slot, x[b]);
            }
    }
    return mats;
}

FFMat arrow_matrix(const EndAlgebra& A, int arrow) {
    auto [u, w] = A.quiver.arrows[arrow];
    FFMat m(A.vdim[w], A.vdim[u]);
    int ap = A.paths.arrow_path[arrow];
    for (int col = 0; col < A.vdim[u]; ++col) {
        auto [i, c, pid] = A.vbasis[u][col];
        int target = A.paths.concat[pid][ap];
        m.at(A.vpos[w].at({i, c, target}), col) = 1;
    }
    return m;
}

namespace {

// Gauss-Jordan over the rationals; returns pivot columns.
std::vector<int> rref_rational(std::vector<std::vector<Rational>>& m, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][col];
        for (int j = col; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace

bool verify_end_basis(const EndAlgebra& A) {
    const Quiver& q = A.quiver;
    // unknowns: entries of one vdim x vdim matrix per vertex
    std::vector<int> voff(q.nv, 0);
    int N = 0;
    for (int v = 0; v < q.nv; ++v) {
        voff[v] = N;
        N += A.vdim[v] * A.vdim[v];
    }
    auto unknown = [&](int v, int r, int c) { return voff[v] + r * A.vdim[v] + c; };

    // order the columns so the generator entries (columns of trivial paths)
    // come last and therefore fall out as the free variables
    std::vector<int> col_order(N, -1);
    std::vector<std::tuple<int, int, int>> t_cols;   // (v, r, c), the trailing block
    int next = 0;
    for (int v = 0; v < q.nv; ++v)
        for (int r = 0; r < A.vdim[v]; ++r)
            for (int c = 0; c < A.vdim[v]; ++c) {
                auto [i, cc, pid] = A.vbasis[v][c];
                if (pid == A.paths.trivial[i]) t_cols.emplace_back(v, r, c);
                else col_order[unknown(v, r, c)] = next++;
            }
    int n_free = static_cast<int>(t_cols.size());
    if (n_free != A.D) return false;
    for (int t = 0; t < n_free; ++t) {
        auto [v, r, c] = t_cols[t];
        col_order[unknown(v, r, c)] = next + t;
    }

    // equations M_w S_a = S_a M_u per arrow
    std::vector<std::vector<Rational>> rows;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [u, w] = q.arrows[a];
        FFMat S = arrow_matrix(A, static_cast<int>(a));
        for (int r = 0; r < A.vdim[w]; ++r)
            for (int c = 0; c < A.vdim[u]; ++c) {
                std::vector<Rational> row(N, Rational(0));
                for (int s = 0; s < A.vdim[w]; ++s)
                    if (S.at(s, c)) row[col_order[unknown(w, r, s)]] += 1;
                for (int s = 0; s < A.vdim[u]; ++s)
                    if (S.at(r, s)) row[col_order[unknown(u, s, c)]] -= 1;
                bool nonzero = false;
                for (const auto& x : row)
                    if (x != 0) { nonzero = true; break; }
                if (nonzero) rows.push_back(std::move(row));
            }
    }

    std::vector<int> pivots = rref_rational(rows, N);
    // solution space must have dimension D with the trailing block free
    if (static_cast<int>(pivots.size()) != N - A.D) return false;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        if (pivots[i] != i) return false;

    // read one nullspace vector per free column and compare with the
    // combinatorial basis element it should equal
    const FieldSpec& F2 = FieldSpec::get(2);
    std::map<std::tuple<int, int, int, int, int>, int> index_of;
    for (int b = 0; b < A.D; ++b) {
        const auto& e = A.basis[b];
        index_of[{e.i, e.c, e.j, e.cp, e.path}] = b;
    }
    std::vector<bool> matched(A.D, false);
    std::vector<std::vector<bool>> seen;   // support disjointness per vertex
    for (int v = 0; v < q.nv; ++v)
        seen.emplace_back(static_cast<size_t>(A.vdim[v]) * A.vdim[v], false);

    for (int t = 0; t < n_free; ++t) {
        int freecol = static_cast<int>(pivots.size()) + t;
        // assemble the solution with this free column set to 1
        std::vector<Rational> sol(N, Rational(0));
        sol[freecol] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            sol[pivots[i]] = -rows[i][freecol];

        auto [v0, r0, c0] = t_cols[t];
        auto [i0, cc0, pid0] = A.vbasis[v0][r0];
        auto [j0, cp0, triv0] = A.vbasis[v0][c0];
        auto it = index_of.find({i0, cc0, j0, cp0, pid0});
        if (it == index_of.end()) return false;
        if (matched[it->second]) return false;
        matched[it->second] = true;

        std::vector<uint32_t> coords(A.D, 0);
        coords[it->second] = 1;
        std::vector<FFMat> expect = ambient_matrices(A, F2, coords);

        for (int v = 0; v < q.nv; ++v)
            for (int r = 0; r < A.vdim[v]; ++r)
                for (int c = 0; c < A.vdim[v]; ++c) {
                    Rational got = sol[col_order[unknown(v, r, c)]];
                    if (got != 0 && got != 1) return false;
                    if (got == 1) {
                        size_t cell = static_cast<size_t>(r) * A.vdim[v] + c;
                        if (seen[v][cell]) return false;   // supports overlap
                        seen[v][cell] = true;
                    }
                    if (got != static_cast<long>(expect[v].at(r, c))) return false;
                }
    }
    for (int b = 0; b < A.D; ++b)
        if (!matched[b]) return false;
    return true;
}

} // namespace stackcount
