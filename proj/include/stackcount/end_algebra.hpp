#pragma once

#include <array>
#include <map>
#include <tuple>

#include "stackcount/gf.hpp"
#include "stackcount/quiver.hpp"

namespace stackcount {

/* Endomorphism algebra of P = (+)_i P(i)^{d_i}, where P(i) is the projective
 * representation whose space at vertex v is spanned by the paths i -> v, with
 * arrows acting by appending.
 *
 * The algebra has a combinatorial basis indexed by (i, c, j, cp, rho) with
 * rho a path i -> j: the morphism sending the generator of copy (j, cp) to
 * rho inside copy (i, c), i.e. p |-> rho p on paths.  Every structure
 * constant is 0 or 1 and the product of two basis elements is again a basis
 * element or zero:
 *   (i1,c1,j1,c1p,rho1) (i2,c2,j2,c2p,rho2)
 *     = (i1,c1,j2,c2p, rho1 rho2)  when (j1,c1p) = (i2,c2), else 0.
 *
 * Coordinates split into a diagonal part (i = j, trivial path), which is the
 * image of the projection pi onto (x)_i Mat_{d_i}, and a complement spanning
 * the radical. */
struct EndAlgebra {
    Quiver quiver;
    PathTable paths;
    std::vector<int> dvec;
    int D = 0;

    struct BasisElem { int i, c, j, cp, path; };
    std::vector<BasisElem> basis;
    std::vector<int> diag_idx;                    // basis indices with i == j
    std::vector<int> rad_idx;                     // basis indices with i != j
    std::vector<std::vector<int>> mult;           // [a][b] -> basis index or -1
    std::vector<int> identity_idx;                // indices of (i,c,i,c,e_i)
    // pi_index[v][c][cp] = index of (v,c,v,cp,e_v)
    std::vector<std::vector<std::vector<int>>> pi_index;

    // spaces P_v: vbasis[v] lists (summand vertex i, copy c, path i -> v)
    std::vector<int> vdim;
    std::vector<std::vector<std::array<int, 3>>> vbasis;
    std::vector<std::map<std::array<int, 3>, int>> vpos;

    int rad_dim() const { return D - static_cast<int>(diag_idx.size()); }
    int diag_dim() const { return static_cast<int>(diag_idx.size()); }
};

EndAlgebra build_end_algebra(const Quiver& q, const std::vector<int>& dvec);

/// x * y through the structure-constant table (y applied first).
std::vector<uint32_t> alg_mul(const EndAlgebra& A, const FieldSpec& F,
                              const std::vector<uint32_t>& x,
                              const std::vector<uint32_t>& y);

std::vector<uint32_t> alg_identity(const EndAlgebra& A);

/// Diagonal blocks pi(x): one d_i x d_i matrix per vertex, entry (c, cp)
/// taken from the coordinate of (i,c,i,cp,e_i).
std::vector<FFMat> pi_blocks(const EndAlgebra& A, const FieldSpec& F,
                             const std::vector<uint32_t>& x);

/// The matrices of x acting on the spaces P_v, in the vbasis coordinates.
std::vector<FFMat> ambient_matrices(const EndAlgebra& A, const FieldSpec& F,
                                    const std::vector<uint32_t>& x);

/// Structure matrix of one arrow a: u -> w as a map P_u -> P_w (0/1 entries).
FFMat arrow_matrix(const EndAlgebra& A, int arrow);

/* Independent reconstruction of the basis: solves the linear system "commute
 * with every arrow action" over the rationals, with the unknowns ordered so
 * that the generator columns (entries in the columns of trivial paths) come
 * last and thus end up as the free variables.  Checks that the resulting
 * nullspace basis consists of 0/1 matrices with pairwise disjoint supports
 * matching ambient_matrices of the combinatorial basis.  Returns true when
 * everything agrees. */
bool verify_end_basis(const EndAlgebra& A);

} // namespace stackcount
