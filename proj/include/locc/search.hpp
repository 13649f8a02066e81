// Numerical certificate search: squared diagonal-violation objective,
// its analytic gradient, structured candidates aggregating the closed
// constructions, and projected gradient descent over co-isometries with
// polar retraction.
#pragma once

#include "locc/certs.hpp"
#include "locc/matrix.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace locc {

struct SearchConfig {
    Index r = 0;  // 0: try r = d, d+1, ..., 2d
    int restarts = 32;
    int max_iters = 2000;
    double step = 0.1;
    double accept_residual = 1e-8;
    std::uint64_t seed = 0;
    bool use_structured = true;
    Tolerance tol;
};

enum class SearchStatus { Found, NotFound, ImpossibleByTraceTest };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Certificate> certificate;
    std::string construction;  // candidate kind or "descent"
    std::vector<double> objective_trace;
    int restarts_used = 0;
    double best_objective = std::numeric_limits<double>::infinity();
    double max_coisometry_defect = 0.0;
};

/// sum over i != j and k of |(W^* M_j^* M_i W)_{kk}|^2; zero exactly when
/// the diagonal conditions hold.
double objective(const ComplexMatrix& w, const StateSet& s);

/// Euclidean (Wirtinger conjugate) gradient of `objective` in W; the
/// descent direction is its negative.  For real parameters,
/// d f / d Re W_ab = 2 Re G_ab and d f / d Im W_ab = 2 Im G_ab.
ComplexMatrix objective_gradient(const ComplexMatrix& w, const StateSet& s);

/// (W W^*)^{-1/2} W: nearest co-isometry to a full-row-rank W.
/// Throws for numerically row-rank-deficient input.
ComplexMatrix polar_retract(const ComplexMatrix& w);

struct Candidate {
    std::string kind;  // "identity" | "fourier" | "schmidt_fourier" | "fillmore" | "hermitian_eigenbasis"
    ComplexMatrix w;
};

/// Closed-form certificate candidates in fixed order: identity, Fourier,
/// V^* F from a simultaneous Schmidt decomposition when one is found, the
/// zero-diagonal unitary for pairs, then eigenbases of the Hermitian
/// parts of the products.
std::vector<Candidate> structured_candidates(const StateSet& s, std::uint64_t seed = 0);

/// Full pipeline: trace-orthogonality gate, structured candidates, then
/// randomized projected descent.  Found requires the verifier to accept;
/// NotFound is advisory and carries the best objective reached.
SearchResult search_certificate(const StateSet& s, const SearchConfig& cfg = {});

}  // namespace locc
