#include "locc/analyze.hpp"

#include "locc/simproto.hpp"

#include <algorithm>

namespace locc {

namespace {

std::string report_label(const std::string& candidate_kind) {
    if (candidate_kind == "identity") return "identity";
    if (candidate_kind == "fourier" || candidate_kind == "schmidt_fourier") {
        return "schmidt_fourier";
    }
    if (candidate_kind == "fillmore") return "fillmore";
    return "numeric_search";
}

}  // namespace

AnalysisReport analyze(const StateSet& s, const AnalysisOptions& opt) {
    s.validate();
    AnalysisReport rep;
    rep.arbitrary_distinguishable = verify_arbitrary(s, opt.tol);

    if (rep.arbitrary_distinguishable) {
        SearchConfig cfg = opt.search;
        cfg.tol = opt.tol;
        cfg.seed = opt.seed;
        if (!opt.run_search) {
            // keep the structured candidates, skip the descent stage
            cfg.restarts = 0;
        }
        SearchResult found = search_certificate(s, cfg);
        if (found.status == SearchStatus::Found) {
            rep.certificate = found.certificate;
            rep.construction_used = report_label(found.construction);
            Protocol proto = build_protocol(s, *rep.certificate, opt.tol);
            rep.exact_success = exact_success(s, proto);
        }
    }

    // Latin square supplement for distinguishable permutation families.
    const bool all_perms = std::all_of(s.matrices.begin(), s.matrices.end(), [&](const auto& m) {
        return is_permutation_matrix(m, opt.tol);
    });
    if (all_perms) {
        const PermutationAnalysis pa = permutation_analysis(s.matrices, opt.tol);
        if (pa.distinguishable) {
            if (!rep.certificate) {
                rep.certificate = pa.certificate;
                rep.construction_used = "identity";
            }
            rep.latin = pa.latin;
        }
    }

    const OperatorSystem system = span_products(s, opt.tol);
    rep.opsys_dim = system.dim();
    rep.algebra_closed = is_multiplicatively_closed(system, opt.tol);
    rep.separating = separating_vector_search(system, opt.separating_trials, opt.seed, opt.tol);

    ModuleInnerProductContext ctx{
        rep.certificate ? rep.certificate->w : ComplexMatrix::Identity(s.d, s.d), opt.tol};
    rep.bounds = rank_bound_check(s.matrices, ctx);

    const bool all_unitary = std::all_of(s.matrices.begin(), s.matrices.end(), [&](const auto& m) {
        return max_abs(m.adjoint() * m - ComplexMatrix::Identity(s.d, s.d)) <= opt.tol.zero_abs;
    });
    rep.unitary_bound_violated = all_unitary && s.size() > s.d;
    return rep;
}

}  // namespace locc
