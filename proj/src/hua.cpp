#include "stackcount/hua.hpp"

#include <algorithm>
#include <numeric>

namespace stackcount {

namespace {

void gen_partitions(int n, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<int> conjugate(const Partition& la) {
    std::vector<int> c(la.empty() ? 0 : la[0], 0);
    for (int part : la)
        for (int i = 0; i < part; ++i) ++c[i];
    return c;
}

Rational rat_pow(const Rational& x, unsigned long k) {
    Rational r(int_pow(Int(x.get_num()), k), int_pow(Int(x.get_den()), k));
    r.canonicalize();
    return r;
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw DomainError("partitions of a negative number");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

long partition_pairing(const Partition& la, const Partition& mu) {
    std::vector<int> a = conjugate(la), b = conjugate(mu);
    long s = 0;
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

QRatFun pochhammer_partition(const Partition& la) {
    QRatFun prod = QRatFun::from_int(1);
    size_t i = 0;
    while (i < la.size()) {
        size_t j = i;
        while (j < la.size() && la[j] == la[i]) ++j;
        prod = prod * q_pochhammer(QRatFun::q(-1), static_cast<int>(j - i));
        i = j;
    }
    return prod;
}

MSeries<QRatRing> hua_series(const Quiver& qv, const std::vector<int>& dmax) {
    if (static_cast<int>(dmax.size()) != qv.nv)
        throw DomainError("dimension bound length does not match the quiver");
    for (int d : dmax)
        if (d < 0) throw DomainError("dimension bounds must be >= 0");

    int nv = qv.nv;
    int bound = 0;
    for (int d : dmax) bound += d;

    // partitions of every size we can need, once
    int dtop = *std::max_element(dmax.begin(), dmax.end());
    std::vector<std::vector<Partition>> parts(dtop + 1);
    for (int s = 0; s <= dtop; ++s) parts[s] = partitions(s);

    QRatRing R;
    MSeries<QRatRing> out = series_zero(R, nv, bound, dmax);

    // odometer over tuples (la_v), la_v a partition of some size <= dmax_v
    std::vector<int> size(nv, 0), idx(nv, 0);
    while (true) {
        std::vector<const Partition*> la(nv);
        for (int v = 0; v < nv; ++v) la[v] = &parts[size[v]][idx[v]];

        long e = 0;
        for (auto [i, j] : qv.arrows) e += partition_pairing(*la[i], *la[j]);
        for (int v = 0; v < nv; ++v) e -= partition_pairing(*la[v], *la[v]);
        QRatFun term = QRatFun::q(static_cast<int>(e));
        for (int v = 0; v < nv; ++v)
            term = term / pochhammer_partition(*la[v]);

        std::vector<int> expo(size.begin(), size.end());
        series_set(R, out, expo, series_get(R, out, expo) + term);

        int v = 0;
        for (; v < nv; ++v) {
            if (++idx[v] < static_cast<int>(parts[size[v]].size())) break;
            idx[v] = 0;
            if (++size[v] <= dmax[v]) break;
            size[v] = 0;
        }
        if (v == nv) break;
    }
    return out;
}

MSeries<QRatRing> kac_polynomials(const Quiver& qv, const std::vector<int>& dmax) {
    QRatRing R;
    MSeries<QRatRing> H = hua_series(qv, dmax);
    QRatFun qm1 = QRatFun::q(1) - QRatFun::from_int(1);
    return series_scale(R, qm1, pleth_log(R, H));
}

Rational indecomposable_count(const std::map<std::vector<int>, QRatFun>& a_table,
                              const std::vector<int>& d, const Rational& q) {
    int g = 0;
    for (int v : d) {
        if (v < 0) throw DomainError("dimension entries must be >= 0");
        g = std::gcd(g, v);
    }
    if (g == 0) throw DomainError("dimension vector must be nonzero");

    Rational total(0);
    for (int r = 1; r <= g; ++r) {
        if (g % r) continue;
        std::vector<int> dp(d.size());
        for (size_t v = 0; v < d.size(); ++v) dp[v] = d[v] / r;
        auto it = a_table.find(dp);
        if (it == a_table.end()) continue;
        // absolutely indecomposable objects whose minimal field has degree
        // exactly r, grouped into Frobenius orbits of size r
        Rational inner(0);
        for (int e = 1; e <= r; ++e) {
            if (r % e) continue;
            long mu = moebius(e);
            if (!mu) continue;
            inner += mu * evaluate_at(it->second,
                                      rat_pow(q, static_cast<unsigned long>(r / e)));
        }
        total += inner / r;
    }
    return total;
}

Rational isoclass_count(const std::map<std::vector<int>, QRatFun>& a_table,
                        const std::vector<int>& d, const Rational& q) {
    size_t nv = d.size();
    for (int v : d)
        if (v < 0) throw DomainError("dimension entries must be >= 0");

    // flat grid over 0 <= e <= d
    std::vector<int> stride(nv, 1);
    int total = 1;
    for (size_t v = 0; v < nv; ++v) {
        stride[v] = total;
        total *= d[v] + 1;
    }
    auto flat = [&](const std::vector<int>& e) {
        int f = 0;
        for (size_t v = 0; v < nv; ++v) f += e[v] * stride[v];
        return f;
    };

    std::vector<Rational> G(total, Rational(0));
    G[0] = 1;

    // multiply in (1 - t^{dp})^{-I(dp)} for every nonzero dp <= d
    std::vector<int> dp(nv, 0);
    while (true) {
        int v = 0;
        for (; v < static_cast<int>(nv); ++v) {
            if (++dp[v] <= d[v]) break;
            dp[v] = 0;
        }
        if (v == static_cast<int>(nv)) break;

        Rational I = indecomposable_count(a_table, dp, q);
        if (I == 0) continue;

        int kmax = 0;
        for (size_t w = 0; w < nv; ++w)
            if (dp[w] > 0) {
                int lim = d[w] / dp[w];
                kmax = kmax == 0 ? lim : std::min(kmax, lim);
            }
        // multiset coefficients binom(I+k-1, k)
        std::vector<Rational> ck(kmax + 1, Rational(1));
        for (int k = 1; k <= kmax; ++k)
            ck[k] = ck[k - 1] * (I + (k - 1)) / k;

        std::vector<Rational> H(total, Rational(0));
        std::vector<int> e(nv, 0);
        while (true) {
            Rational acc(0);
            std::vector<int> base = e;
            for (int k = 0; k <= kmax; ++k) {
                bool ok = true;
                for (size_t w = 0; w < nv; ++w) {
                    base[w] = e[w] - k * dp[w];
                    if (base[w] < 0) { ok = false; break; }
                }
                if (!ok) break;
                if (ck[k] != 0) acc += ck[k] * G[flat(base)];
            }
            H[flat(e)] = acc;
            int w = 0;
            for (; w < static_cast<int>(nv); ++w) {
                if (++e[w] <= d[w]) break;
                e[w] = 0;
            }
            if (w == static_cast<int>(nv)) break;
        }
        G.swap(H);
    }
    return G[flat(d)];
}

} // namespace stackcount
