// Diagonal-algebra-valued inner products <X,Y>_W = Delta(W^* Y^* X W),
// the diagonal-rescaling equivalence relation, and the orthogonal-family
// size and rank bounds they imply.
#pragma once

#include "locc/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace locc {

struct ModuleInnerProductContext {
    ComplexMatrix w;  // d x r, r >= d; identity when defaulted at call sites
    Tolerance tol;
};

/// Context with W = I_d.
ModuleInnerProductContext default_module_context(Index d, const Tolerance& tol = {});

/// Diagonal r x r matrix Delta(W^* Y^* X W).  Conjugate-symmetric and
/// right-linear over diagonal multipliers.
ComplexMatrix module_inner(const ComplexMatrix& x, const ComplexMatrix& y,
                           const ModuleInnerProductContext& ctx);

/// If U = V D for an invertible diagonal D, returns D; empty otherwise.
std::optional<ComplexMatrix> equivalence_check(const ComplexMatrix& u, const ComplexMatrix& v,
                                               const Tolerance& tol = {});

struct OrthogonalFamilyReport {
    bool orthogonal = false;
    Index n = 0;
    Index d = 0;
    std::optional<std::pair<int, int>> failing_pair;
    double max_inner_residual = 0.0;
    bool bound_satisfied = false;  // n <= d, must hold whenever orthogonal
    bool expansion_checked = false;
    Index expansion_size = 0;
    double expansion_max_residual = 0.0;  // pairwise HS inners of {U_k Z^i}
};

/// Verifies pairwise <U_i, U_j> = 0 for unitaries.  On success with W = I
/// also materializes the expansion {U_k Z^i} of n*d matrices and checks
/// its pairwise Hilbert-Schmidt orthogonality.
OrthogonalFamilyReport check_orthogonal_family(const std::vector<ComplexMatrix>& us,
                                               const ModuleInnerProductContext& ctx);

/// True iff every d columns of W are linearly independent.  Exhaustive
/// for r <= 12, otherwise 200 seeded random d-subsets.
bool genericity_check(const ComplexMatrix& w, const Tolerance& tol = {}, std::uint64_t seed = 0);

struct RankBoundReport {
    bool orthogonal = false;
    bool generic = false;
    bool preconditions_ok = false;
    Index n = 0;
    Index d = 0;
    std::vector<Index> ranks;
    Index sum_ranks = 0;
    Index bound = 0;  // d^2
    Index slack = 0;
    bool bound_holds = false;
};

/// For a <.,.>_W-orthogonal family with generic W, checks sum_k rank(M_k)
/// <= d^2 and reports the slack.  Violated preconditions are reported,
/// not asserted.
RankBoundReport rank_bound_check(const std::vector<ComplexMatrix>& ms,
                                 const ModuleInnerProductContext& ctx);

}  // namespace locc
