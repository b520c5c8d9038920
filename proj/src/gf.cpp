#include "stackcount/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace stackcount {

namespace {

// Polynomial helpers over the prime field F_p; coefficients ascending.
using PV = std::vector<uint32_t>;

void ptrim(PV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PV pmul(const PV& a, const PV& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PV r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    ptrim(r);
    return r;
}

// Remainder modulo monic f.
PV pmod(PV a, const PV& f, uint32_t p) {
    ptrim(a);
    size_t df = f.size() - 1;
    while (a.size() > df) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead) {
            for (size_t i = 0; i < df; ++i) {
                uint64_t t = (uint64_t)lead * f[i] % p;
                uint32_t& c = a[shift + i];
                c = static_cast<uint32_t>((c + p - t) % p);
            }
        }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PV psub(PV a, const PV& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

uint32_t pinv_scalar(uint32_t a, uint32_t p) {
    // Fermat; p is prime and a != 0.
    uint64_t r = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

PV pgcd(PV a, PV b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // reduce a mod b after scaling b monic
        uint32_t ib = pinv_scalar(b.back(), p);
        PV bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>((uint64_t)c * ib % p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

PV ppowmod(PV base, uint64_t e, const PV& f, uint32_t p) {
    PV r{1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(const PV& f, uint32_t p, uint32_t k) {
    // Rabin: x^{p^k} = x mod f, and gcd(x^{p^{k/l}} - x, f) = const for each
    // prime l dividing k.
    const PV x{0, 1};
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= p;
    PV frob = ppowmod(x, pk, f, p);
    if (psub(frob, x, p) != PV{}) return false;
    for (uint64_t l : distinct_prime_factors(k)) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < k / l; ++i) e *= p;
        PV g = pgcd(psub(ppowmod(x, e, f, p), x, p), f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

PV code_to_poly(uint64_t code, uint32_t p, uint32_t k) {
    PV a(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
        a[i] = static_cast<uint32_t>(code % p);
        code /= p;
    }
    ptrim(a);
    return a;
}

uint32_t poly_to_code(const PV& a, uint32_t p) {
    uint64_t code = 0, mult = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        code += a[i] * mult;
        mult *= p;
    }
    return static_cast<uint32_t>(code);
}

// Lexicographically least (c_0, ..., c_{k-1}) giving an irreducible
// x^k + c_{k-1} x^{k-1} + ... + c_0 over F_p.
PV find_modulus(uint32_t p, uint32_t k) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) total *= p;
    for (uint64_t m = 0; m < total; ++m) {
        PV f(k + 1, 0);
        f[k] = 1;
        uint64_t rest = m;
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t place = 1;
            for (uint32_t j = 0; j < k - 1 - i; ++j) place *= p;
            f[i] = static_cast<uint32_t>(rest / place);
            rest %= place;
        }
        if (f[0] == 0) continue;   // divisible by x
        if (is_irreducible(f, p, k)) return f;
    }
    throw InternalCheckError("no irreducible modulus found");
}

} // namespace

uint32_t FieldSpec::mul_reference(uint32_t a, uint32_t b) const {
    if (k == 1) return static_cast<uint32_t>((uint64_t)a * b % p);
    PV r = pmod(pmul(code_to_poly(a, p, k), code_to_poly(b, p, k), p), modulus, p);
    return poly_to_code(r, p);
}

uint32_t FieldSpec::add_general(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t da = a % p, db = b % p;
        a /= p;
        b /= p;
        uint32_t s = da + db;
        if (s >= p) s -= p;
        r += s * mult;
        mult *= p;
    }
    return r;
}

uint32_t FieldSpec::neg_general(uint32_t a) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t da = a % p;
        a /= p;
        r += (da ? p - da : 0) * mult;
        mult *= p;
    }
    return r;
}

FieldSpec FieldSpec::make(uint64_t q) {
    uint64_t p64 = 0;
    unsigned k64 = 0;
    if (q < 2 || !is_prime_power(q, &p64, &k64))
        throw DomainError("field size must be a prime power >= 2");
    if (q > max_q)
        throw DomainError("field size exceeds the supported bound 2^20");

    FieldSpec F;
    F.q = q;
    F.p = static_cast<uint32_t>(p64);
    F.k = static_cast<uint32_t>(k64);

    if (F.k > 1) {
        F.modulus = find_modulus(F.p, F.k);

        // Multiplicative generator: order q-1 checked against each maximal
        // proper divisor, with products done via the polynomial reference.
        auto elem_pow = [&](uint32_t a, uint64_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = F.mul_reference(r, a);
                a = F.mul_reference(a, a);
                e >>= 1;
            }
            return r;
        };
        std::vector<uint64_t> primes = distinct_prime_factors(q - 1);
        uint32_t g = 0;
        for (uint32_t cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (uint64_t l : primes)
                if (elem_pow(cand, (q - 1) / l) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        if (!g) throw InternalCheckError("no multiplicative generator found");
        F.generator = g;

        F.exp_tab.assign(q - 1, 0);
        F.log_tab.assign(q, 0);
        uint32_t cur = 1;
        for (uint64_t i = 0; i < q - 1; ++i) {
            F.exp_tab[i] = cur;
            F.log_tab[cur] = static_cast<uint32_t>(i);
            cur = F.mul_reference(cur, g);
        }
        if (cur != 1) throw InternalCheckError("generator order mismatch");
    }

    if (q <= dense_table_limit) {
        F.mul_tab.assign(q * q, 0);
        for (uint64_t a = 0; a < q; ++a)
            for (uint64_t b = 0; b < q; ++b)
                F.mul_tab[a * q + b] = F.mul_reference(
                    static_cast<uint32_t>(a), static_cast<uint32_t>(b));
        if (F.p > 2 && F.k > 1) {
            F.add_tab.assign(q * q, 0);
            for (uint64_t a = 0; a < q; ++a)
                for (uint64_t b = 0; b < q; ++b)
                    F.add_tab[a * q + b] = F.add_general(
                        static_cast<uint32_t>(a), static_cast<uint32_t>(b));
        }
    }
    return F;
}

const FieldSpec& FieldSpec::get(uint64_t q) {
    static std::mutex mu;
    static std::map<uint64_t, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<FieldSpec>(make(q))).first;
    return *it->second;
}

// ---------------------------------------------------------------------------

FFMat mat_identity(int n) {
    FFMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FFMat mat_mul(const FieldSpec& F, const FFMat& A, const FFMat& B) {
    if (A.cols != B.rows) throw DomainError("matrix shape mismatch");
    FFMat r(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int l = 0; l < A.cols; ++l) {
            uint32_t v = A.at(i, l);
            if (!v) continue;
            for (int j = 0; j < B.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, B.at(l, j)));
        }
    return r;
}

FFMat mat_add(const FieldSpec& F, const FFMat& A, const FFMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DomainError("matrix shape mismatch");
    FFMat r = A;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(r.a[i], B.a[i]);
    return r;
}

FFMat mat_sub(const FieldSpec& F, const FFMat& A, const FFMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DomainError("matrix shape mismatch");
    FFMat r = A;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(r.a[i], B.a[i]);
    return r;
}

bool mat_is_zero(const FFMat& A) {
    for (uint32_t v : A.a)
        if (v) return false;
    return true;
}

int mat_rref_inplace(const FieldSpec& F, FFMat& m, std::vector<int>& pivots) {
    pivots.clear();
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        uint32_t iv = F.inv(m.at(r, col));
        for (int j = col; j < m.cols; ++j)
            m.at(r, j) = F.mul(iv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            uint32_t f = m.at(i, col);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(col);
        ++r;
    }
    return r;
}

int mat_rank(const FieldSpec& F, FFMat m) {
    std::vector<int> piv;
    return mat_rref_inplace(F, m, piv);
}

std::vector<std::vector<uint32_t>> mat_nullspace(const FieldSpec& F, FFMat m) {
    std::vector<int> piv;
    int rank = mat_rref_inplace(F, m, piv);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[j] = 1;
        for (int i = 0; i < rank; ++i)
            v[piv[i]] = F.neg(m.at(i, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool mat_is_invertible(const FieldSpec& F, const FFMat& m) {
    return m.rows == m.cols && mat_rank(F, m) == m.rows;
}

FFMat mat_inverse(const FieldSpec& F, const FFMat& m) {
    if (m.rows != m.cols) throw DomainError("inverse of a non-square matrix");
    int n = m.rows;
    FFMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    mat_rref_inplace(F, aug, piv);
    // the identity block keeps the augmented rank at n; singularity shows up
    // as a pivot escaping into the right half
    for (int c : piv)
        if (c >= n) throw DomainError("matrix is singular");
    FFMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

bool mat_is_nilpotent(const FieldSpec& F, FFMat m) {
    if (m.rows != m.cols) throw DomainError("nilpotency of a non-square matrix");
    int n = m.rows;
    if (n == 0) return true;
    int e = 1;
    while (e < n) {
        m = mat_mul(F, m, m);
        e *= 2;
    }
    return mat_is_zero(m);
}

} // namespace stackcount
