#pragma once

#include <cstdint>
#include <vector>

#include "stackcount/errors.hpp"
#include "stackcount/rational.hpp"

namespace stackcount {

/* Arithmetic in a finite field with q = p^k elements, q <= 2^20.
 *
 * Elements are integers in [0, q) read as radix-p digit vectors: the code
 * sum_i c_i p^i stands for the residue sum_i c_i x^i modulo a fixed monic
 * irreducible polynomial of degree k.  The modulus is deterministic: among
 * monic irreducibles x^k + c_{k-1} x^{k-1} + ... + c_0 it has the
 * lexicographically least constant-first tuple (c_0, ..., c_{k-1}).
 *
 * Multiplication uses dense q x q tables for small q and discrete-log tables
 * otherwise; addition is XOR in characteristic 2 and digitwise mod p else. */
struct FieldSpec {
    uint64_t q = 0;
    uint32_t p = 0;
    uint32_t k = 1;
    std::vector<uint32_t> modulus;   // ascending coefficients, size k+1; empty when k == 1
    std::vector<uint32_t> exp_tab;   // k > 1: exp_tab[i] = g^i, size q-1
    std::vector<uint32_t> log_tab;   // k > 1: log_tab[exp_tab[i]] = i, size q
    std::vector<uint32_t> mul_tab;   // q <= dense_table_limit: q*q products
    std::vector<uint32_t> add_tab;   // q <= dense_table_limit, p > 2, k > 1
    uint32_t generator = 0;          // k > 1: multiplicative generator

    static constexpr uint64_t max_q = 1u << 20;
    static constexpr uint64_t dense_table_limit = 256;

    static FieldSpec make(uint64_t q);
    /// Cached variant; the reference stays valid for the process lifetime.
    static const FieldSpec& get(uint64_t q);

    uint32_t from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p == 2) return a ^ b;
        if (k == 1) {
            uint32_t s = a + b;
            return s >= p ? s - p : s;
        }
        if (!add_tab.empty()) return add_tab[a * q + b];
        return add_general(a, b);
    }

    uint32_t neg(uint32_t a) const {
        if (p == 2) return a;
        if (k == 1) return a ? p - a : 0;
        return neg_general(a);
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (!mul_tab.empty()) return mul_tab[a * q + b];
        if (k == 1) return static_cast<uint32_t>((uint64_t)a * b % p);
        if (a == 0 || b == 0) return 0;
        uint64_t s = (uint64_t)log_tab[a] + log_tab[b];
        if (s >= q - 1) s -= q - 1;
        return exp_tab[s];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DomainError("inverse of zero field element");
        if (k == 1) return pow(a, p - 2);
        uint64_t l = log_tab[a];
        return exp_tab[l == 0 ? 0 : q - 1 - l];
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (k > 1) {
            uint64_t l = (uint64_t)log_tab[a] * (e % (q - 1)) % (q - 1);
            return exp_tab[l];
        }
        uint32_t r = 1, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Reference product via polynomial arithmetic modulo the modulus;
    /// independent of the lookup tables, used to validate them.
    uint32_t mul_reference(uint32_t a, uint32_t b) const;

  private:
    uint32_t add_general(uint32_t a, uint32_t b) const;
    uint32_t neg_general(uint32_t a) const;
};

// ---------------------------------------------------------------------------
// Dense matrices over a FieldSpec field.

struct FFMat {
    int rows = 0, cols = 0;
    std::vector<uint32_t> a;

    FFMat() = default;
    FFMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const FFMat&) const = default;
};

FFMat mat_identity(int n);
FFMat mat_mul(const FieldSpec& F, const FFMat& A, const FFMat& B);
FFMat mat_add(const FieldSpec& F, const FFMat& A, const FFMat& B);
FFMat mat_sub(const FieldSpec& F, const FFMat& A, const FFMat& B);
bool mat_is_zero(const FFMat& A);

/// Reduce m to reduced row-echelon form in place; returns the rank and the
/// pivot column of each of the first rank rows.
int mat_rref_inplace(const FieldSpec& F, FFMat& m, std::vector<int>& pivots);
int mat_rank(const FieldSpec& F, FFMat m);
/// Basis of the right kernel {v : M v = 0}, one vector per row of the result.
std::vector<std::vector<uint32_t>> mat_nullspace(const FieldSpec& F, FFMat m);
bool mat_is_invertible(const FieldSpec& F, const FFMat& m);
FFMat mat_inverse(const FieldSpec& F, const FFMat& m);   // throws if singular
bool mat_is_nilpotent(const FieldSpec& F, FFMat m);      // square input

} // namespace stackcount
