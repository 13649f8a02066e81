// Operator systems spanned by pairwise products of the defining matrices,
// separating-vector search, block-structure criteria, algebra detection
// and the unambiguous-discrimination test.
#pragma once

#include "locc/certs.hpp"
#include "locc/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locc {

/// Self-adjoint unital span with a Hilbert-Schmidt orthonormal basis.
/// `generators[b]` records which product M_j^* M_i contributed basis
/// element b; (-1,-1) marks the injected identity.
struct OperatorSystem {
    Index d = 0;
    std::vector<ComplexMatrix> basis;
    std::vector<std::pair<int, int>> generators;

    Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Orthonormal basis of span({M_j^* M_i : all i,j} U {I}) by modified
/// Gram-Schmidt with re-orthogonalization.
OperatorSystem span_products(const StateSet& s, const Tolerance& tol = {});

/// True iff every product of two basis elements stays in the span
/// (projection residual within tolerance), i.e. the span is an algebra.
bool is_multiplicatively_closed(const OperatorSystem& o, const Tolerance& tol = {});

/// Direct-sum structure (+)_i I_{k_i} (x) M_{n_i}: pairs (multiplicity,
/// block size).
struct BlockStructure {
    std::vector<std::pair<int, int>> blocks;
};

/// Separating vector exists iff k_i >= n_i for every summand.
bool block_structure_has_separating_vector(const BlockStructure& b);

/// Search outcome: either a witness vector or a documented negative.
/// "dimension-bound" is a proof (dim > d forbids a separating vector);
/// "rank-deficient" only reports that the randomized trials failed.
struct SeparatingVectorResult {
    std::optional<StateVector> vector;
    Index max_rank_observed = 0;
    std::string reason;  // "found" | "dimension-bound" | "rank-deficient"

    bool found() const { return vector.has_value(); }
};

/// Random Gaussian trials: v separates iff [B_1 v | ... | B_s v] has full
/// column rank, which holds on a Zariski-open set when it holds at all.
SeparatingVectorResult separating_vector_search(const OperatorSystem& o, int trials = 16,
                                                std::uint64_t seed = 0, const Tolerance& tol = {});

/// Membership test for the operator system
///   Delta(W^* X W) = (Tr X / d) Delta(W^* W).
bool theorem_delta_membership(const ComplexMatrix& x, const ComplexMatrix& w,
                              const Tolerance& tol = {});

/// Column of W at the first index with a strictly positive diagonal
/// entry of W^* W; separates any C*-subalgebra of the membership set.
StateVector delta_separating_vector(const ComplexMatrix& w);

struct UnambiguousResult {
    std::optional<StateVector> vector;
    Index max_rank_observed = 0;
    std::string reason;  // "found" | "dimension-bound" | "rank-deficient"

    bool found() const { return vector.has_value(); }
};

/// Looks for phi making {M_i phi} linearly independent, which suffices
/// for unambiguous one-way discrimination.  Tries the columns of the
/// optional certificate first, then random Gaussian vectors.
UnambiguousResult unambiguous_check(const StateSet& s, int trials = 16, std::uint64_t seed = 0,
                                    const ComplexMatrix* certificate_hint = nullptr,
                                    const Tolerance& tol = {});

}  // namespace locc
