#ifndef COMBMET_ISOMETRY_HPP
#define COMBMET_ISOMETRY_HPP

#include <cstdint>
#include <vector>

#include "combmet/caps.hpp"
#include "combmet/covering.hpp"
#include "combmet/gf.hpp"
#include "combmet/metric.hpp"

namespace combmet {

/// phi[i] = image of coordinate i (0-based).
using Permutation = std::vector<std::size_t>;

/// An invertible matrix acting on row vectors (x |-> x * matrix).  When
/// `certified` is set, weight preservation has been checked exhaustively
/// over all q^n vectors.
struct Isometry {
    Matrix matrix;
    bool certified = false;
};

/// True iff the image of every basic set under phi is again a basic set.
bool preserves_covering(const Covering& f, const Permutation& phi);

/// Matrix of x |-> (x_phi(1), ..., x_phi(n)) in the row-vector convention.
Matrix permutation_matrix(FieldContext ctx, const Permutation& phi);

/// All permutations of [n] preserving f (n <= caps.max_perm_n).
std::vector<Permutation> covering_preserving_permutations(const Covering& f,
                                                          const Caps& caps = {});

/// The permutation part G of the isometry group, as certified matrices.
std::vector<Isometry> group_G(const Covering& f, FieldContext ctx, const Caps& caps = {});

/// True iff every diagonal class-block of b is invertible and every nonzero
/// off-diagonal entry sits at (x, y) with y's class dominating x's class.
bool respects_M(const ClassStructure& cs, const Matrix& b);
bool respects_M(const Covering& f, const Matrix& b);

/// Expected size of K_M: prod |GL(h_i, q)| * q^(#permitted off-diagonal
/// cells); saturates at UINT64_MAX.
std::uint64_t k_m_order(const Covering& f, FieldContext ctx);

/// All matrices respecting M, every element certified.
std::vector<Isometry> group_K_M(const Covering& f, FieldContext ctx,
                                const Caps& caps = {});

/// Exhaustive weight-preservation check over all q^n vectors.
bool preserves_weight(const Covering& f, const Matrix& t,
                      std::uint64_t cap = Caps{}.max_enum);

struct GroupClosureResult {
    std::vector<Isometry> elements;  // BFS discovery order, identity first
    std::size_t g_order = 0;         // |G|
    std::size_t km_order = 0;        // |K_M|
};

/// The subgroup generated by G and K_M: breadth-first product closure to a
/// fixpoint, every element certified.  The closure runs over a reduced
/// generating set (G, per-class GL generators, permitted transvections) and
/// then verifies that all of G and K_M landed inside.
GroupClosureResult full_isometry_group(const Covering& f, FieldContext ctx,
                                       const Caps& caps = {});

/// The entire group of linear isometries, found by backtracking over images
/// of the unit vectors with incremental weight checks; equivalent to
/// filtering all invertible matrices and certifying each.
std::vector<Isometry> brute_force_isometries(const Covering& f, FieldContext ctx,
                                             const Caps& caps = {});

/// Budgeted variant: gives up (nullopt) once the backtracking has spent
/// `work_budget` elementary steps, so callers can fall back to the closure.
std::optional<std::vector<Isometry>> try_brute_force_isometries(
    const Covering& f, FieldContext ctx, const Caps& caps, std::uint64_t work_budget);

struct Decomposition {
    Permutation phi;
    Matrix block_part;  // respects M; t = permutation_matrix(phi) * block_part
};

/// Splits a certified isometry as T_phi * B by scanning G and testing
/// respects_M(T_phi^-1 * T).  Throws NotDecomposable when no phi works;
/// for a certified isometry that signals a genuine product-structure
/// violation.
Decomposition decompose(const Covering& f, FieldContext ctx, const Isometry& t,
                        const Caps& caps = {});

}  // namespace combmet

#endif
