#pragma once

#include <array>
#include <string>

#include "stackcount/end_algebra.hpp"
#include "stackcount/rational.hpp"

namespace stackcount {

/* The three element conditions whose pair counts the engine produces:
 *   nilpotent ("0"), invertible ("*"), unconstrained ("a").
 * An endomorphism is invertible iff all its diagonal blocks are, and
 * nilpotent iff all its diagonal blocks are: the radical part never
 * matters, which the classifiers below exploit and the ambient variants
 * double-check. */
enum class ZType { nilpotent = 0, invertible = 1, all = 2 };

ZType ztype_parse(const std::string& s);
std::string ztype_name(ZType t);

struct CountOptions {
    uint64_t budget = uint64_t(1) << 34;
};

Int gl_order(uint64_t q, int d);
Int nilpotent_matrix_count(uint64_t q, int d);   // q^(d^2-d)

/// #Aut(P) = prod_i #GL_{d_i}(q) * q^(dim rad).
Int count_aut(const EndAlgebra& A, uint64_t q);

bool elem_is_invertible(const EndAlgebra& A, const FieldSpec& F,
                        const std::vector<uint32_t>& x);
bool elem_is_nilpotent(const EndAlgebra& A, const FieldSpec& F,
                       const std::vector<uint32_t>& x);
bool elem_has_type(const EndAlgebra& A, const FieldSpec& F,
                   const std::vector<uint32_t>& x, ZType t);
/// Same predicate read off the action on the spaces P_v instead of the
/// diagonal blocks; used to cross-check the classifiers.
bool elem_has_type_ambient(const EndAlgebra& A, const FieldSpec& F,
                           const std::vector<uint32_t>& x, ZType t);

/// Conjugacy classes of d x d matrices under GL_d(F): canonical (smallest
/// mixed-radix code) representative, orbit size, and type flags.  Results
/// are cached per (q, d).
struct ConjClass {
    FFMat rep;
    uint64_t size = 0;
    bool invertible = false, nilpotent = false;
};
const std::vector<ConjClass>& matrix_conj_classes(const FieldSpec& F, int d,
                                                  uint64_t budget);

/* Exact number of pairs (x, y) in End(P) with x y = y x, x of type s1 and y
 * of type s2.  The engine enumerates x by diagonal-part conjugacy classes
 * times radical fibers and reads the y-count off the centralizer of x;
 * orientation is chosen so the outer type is the rarer one.  Throws
 * BudgetExceeded when an enumeration would step past opts.budget. */
Int count_commuting(const EndAlgebra& A, const FieldSpec& F, ZType s1,
                    ZType s2, const CountOptions& opts = {});

/// All nine counts at once, sharing the class/fiber sweeps.
std::array<std::array<Int, 3>, 3> count_commuting_table(
    const EndAlgebra& A, const FieldSpec& F, const CountOptions& opts = {});

/* Reference count: loops over every pair of elements, tests commutation and
 * the type conditions entirely through the matrices acting on the spaces
 * P_v, ignoring the structure-constant table and the diagonal projection.
 * Needs q^(2 dim) <= budget. */
Int naive_count_commuting(const EndAlgebra& A, const FieldSpec& F, ZType s1,
                          ZType s2, uint64_t budget = uint64_t(1) << 26);

} // namespace stackcount
