// One-way LOCC distinguishability certificates: verification of the
// zero-diagonal co-isometry condition, the equivalent measurement form,
// and constructive routes for permutation families, simultaneously
// diagonalizable families and two-state sets.
#pragma once

#include "locc/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locc {

/// An ordered family {M_i} of d x d matrices; member i encodes the
/// bipartite state (I (x) M_i)|Phi> with |Phi> = vec(I)/sqrt(d).
struct StateSet {
    Index d = 0;
    std::vector<ComplexMatrix> matrices;
    std::vector<std::string> labels;  // empty or one per matrix

    Index size() const { return static_cast<Index>(matrices.size()); }
    /// Throws std::invalid_argument on shape mismatch or non-finite entries.
    void validate() const;
};

/// A d x r co-isometry W (W W^* = I_d) whose conjugated columns define
/// Alice's measurement.  `residual` is the verifier's max diagonal
/// magnitude against some state set; it is measured, never assumed.
struct Certificate {
    ComplexMatrix w;
    std::optional<double> residual;

    Index d() const { return w.rows(); }
    Index r() const { return w.cols(); }
};

/// Rank-one measurement {m_k, |phi_k>} with sum_k m_k |phi_k><phi_k| = I.
struct AliceMeasurement {
    std::vector<double> weights;
    std::vector<StateVector> vectors;

    Index size() const { return static_cast<Index>(weights.size()); }
    /// Max-entry distance of sum_k m_k |phi_k><phi_k| from the identity.
    double completeness_defect(Index d) const;
};

/// d x d array over {1..d} with no repeat in any row or column.
struct LatinSquare {
    Index d = 0;
    std::vector<int> cells;  // row-major

    int at(Index i, Index j) const { return cells[static_cast<std::size_t>(i * d + j)]; }
    bool valid() const;
};

/// Outcome of checking condition (iii) for a candidate W.
struct CertificateReport {
    bool coisometry_ok = false;
    double coisometry_defect = 0.0;
    double max_diag_residual = 0.0;
    bool accepted = false;
};

/// True iff |Tr(M_j^* M_i)| vanishes for all distinct pairs, i.e. the
/// states are orthogonal and hence distinguishable by arbitrary operations.
bool verify_arbitrary(const StateSet& s, const Tolerance& tol = {});

/// Max diagonal-entry magnitude of W^* M_j^* M_i W over all i != j.
double certificate_residual(const StateSet& s, const ComplexMatrix& w);

/// Checks W W^* = I and the zero-diagonal condition; accepts iff both hold.
CertificateReport verify_oneway_certificate(const StateSet& s, const ComplexMatrix& w,
                                            const Tolerance& tol = {});

/// W = sum_k sqrt(m_k) |phi_k><k|.  Throws if completeness fails.
Certificate alice_to_w(const AliceMeasurement& a, const Tolerance& tol = {});

/// Columns of W, normalized; weights are squared column norms; zero
/// columns are dropped.  Throws if W is not a co-isometry.
AliceMeasurement w_to_alice(const Certificate& c, const Tolerance& tol = {});

struct PermutationAnalysis {
    bool distinguishable = false;
    std::optional<Certificate> certificate;  // identity when distinguishable
    std::optional<LatinSquare> latin;        // when distinguishable and n == d
};

/// Decides distinguishability of a permutation family via the diagonal
/// test and emits the Latin square L = sum_k k P_k when n == d.
PermutationAnalysis permutation_analysis(const std::vector<ComplexMatrix>& perms,
                                         const Tolerance& tol = {});

/// Joint factorization M_k = U D_k V with shared unitaries and complex
/// diagonal factors.
struct SchmidtDecomposition {
    ComplexMatrix u;
    std::vector<ComplexMatrix> diagonals;
    ComplexMatrix v;
};

/// Randomized search for a simultaneous (weak) Schmidt decomposition:
/// SVD of a random combination of the family, checked against every
/// member.  Empty result means the search failed, not that no
/// decomposition exists.
std::optional<SchmidtDecomposition> simultaneous_schmidt(const StateSet& s,
                                                         const Tolerance& tol = {},
                                                         std::uint64_t seed = 0);

/// W = V^* F.  For any pairwise trace-orthogonal family with
/// decomposition M_k = U D_k V this W satisfies the diagonal condition
/// (conjugated products become trace-zero circulants).
Certificate schmidt_to_certificate(const ComplexMatrix& v, const Tolerance& tol = {});

/// Unitary V with Delta(V^* M V) = 0 for trace-zero M.  Deterministic;
/// throws if the trace is nonzero beyond tolerance.
ComplexMatrix fillmore_zero_diagonal(const ComplexMatrix& m, const Tolerance& tol = {});

/// Certificate for a pair of trace-orthogonal matrices: W = V from the
/// zero-diagonal construction applied to M2^* M1.
Certificate two_state_certificate(const ComplexMatrix& m1, const ComplexMatrix& m2,
                                  const Tolerance& tol = {});

/// True iff every entry of m is within tol of {0,1} and each row and
/// column has exactly one unit entry.
bool is_permutation_matrix(const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace locc
