// End-to-end analysis of a state set: trace-orthogonality gate,
// certificate constructions in structured order with a descent fallback,
// operator-system diagnostics and the module rank bound.
#pragma once

#include "locc/certs.hpp"
#include "locc/hmod.hpp"
#include "locc/opsys.hpp"
#include "locc/search.hpp"

#include <optional>
#include <string>

namespace locc {

struct AnalysisOptions {
    Tolerance tol;
    std::uint64_t seed = 0;
    bool run_search = true;  // numeric descent fallback
    SearchConfig search;
    int separating_trials = 16;
};

struct AnalysisReport {
    bool arbitrary_distinguishable = false;
    std::optional<Certificate> certificate;
    // "identity" | "permutation" | "schmidt_fourier" | "fillmore" |
    // "numeric_search" | "none"
    std::string construction_used = "none";
    std::optional<LatinSquare> latin;
    std::optional<double> exact_success;

    Index opsys_dim = 0;
    bool algebra_closed = false;
    SeparatingVectorResult separating;

    RankBoundReport bounds;

    // n unitary members with n > d can never be certified; this flags the
    // structural obstruction alongside a missing certificate.
    bool unitary_bound_violated = false;
};

AnalysisReport analyze(const StateSet& s, const AnalysisOptions& opt = {});

}  // namespace locc
