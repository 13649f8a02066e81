// locc: generate, analyze, search and simulate one-way LOCC
// distinguishability instances encoded as JSON state sets.
#include "locc/analyze.hpp"
#include "locc/families.hpp"
#include "locc/json_io.hpp"
#include "locc/search.hpp"
#include "locc/simproto.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

void emit(const locc::Json& j, const std::string& json_out) {
    if (json_out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        locc::write_json_file(json_out, j);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-way LOCC distinguishability certificates: generators, analysis, "
                 "numeric search and protocol simulation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    double tol_zero = 1e-9;
    std::string json_out;
    app.add_option("--seed", seed, "seed for all randomized routines");
    app.add_option("--tol", tol_zero, "absolute zero tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--json-out", json_out, "write the JSON result to this path");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named state-set family");
    std::string family;
    locc::Index gen_d = 2;
    locc::Index gen_n = 0;
    gen->add_option("--family", family,
                    "paulis-x | paulis-z | paulis-all | permutations-cyclic | "
                    "random-unitary | random-orthogonal-pair")
        ->required();
    gen->add_option("--d", gen_d, "qudit dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--n", gen_n, "family size (default: natural size)");

    // analyze
    auto* an = app.add_subcommand("analyze", "full distinguishability analysis of a state set");
    std::string analyze_input;
    bool no_search = false;
    int an_restarts = 32;
    int an_max_iters = 2000;
    locc::Index an_r = 0;
    double an_accept = 1e-8;
    an->add_option("input", analyze_input, "state-set JSON file")->required();
    an->add_flag("--no-search", no_search, "skip the numeric descent fallback");
    an->add_option("--restarts", an_restarts);
    an->add_option("--max-iters", an_max_iters);
    an->add_option("--r", an_r, "fixed certificate width (default: schedule d..2d)");
    an->add_option("--accept-residual", an_accept);

    // search
    auto* se = app.add_subcommand("search", "numeric certificate search only");
    std::string search_input;
    int se_restarts = 32;
    int se_max_iters = 2000;
    locc::Index se_r = 0;
    double se_accept = 1e-8;
    se->add_option("input", search_input, "state-set JSON file")->required();
    se->add_option("--restarts", se_restarts);
    se->add_option("--max-iters", se_max_iters);
    se->add_option("--r", se_r, "fixed certificate width (default: schedule d..2d)");
    se->add_option("--accept-residual", se_accept);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo run of a certified protocol");
    std::string sim_input;
    std::string cert_path;
    long long trials = 100000;
    sim->add_option("input", sim_input, "state-set JSON file")->required();
    sim->add_option("--cert", cert_path, "certificate JSON file")->required();
    sim->add_option("--trials", trials)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    locc::Tolerance tol;
    tol.zero_abs = tol_zero;

    try {
        if (gen->parsed()) {
            const locc::StateSet s = locc::make_family(family, gen_d, gen_n, seed);
            emit(locc::stateset_to_json(s), json_out);
            return kExitOk;
        }

        if (an->parsed()) {
            const locc::StateSet s = locc::stateset_from_json(locc::load_json_file(analyze_input));
            locc::AnalysisOptions opt;
            opt.tol = tol;
            opt.seed = seed;
            opt.run_search = !no_search;
            opt.search.restarts = an_restarts;
            opt.search.max_iters = an_max_iters;
            opt.search.r = an_r;
            opt.search.accept_residual = an_accept;
            const locc::AnalysisReport rep = locc::analyze(s, opt);
            locc::Json j = locc::analysis_report_to_json(rep);
            if (!rep.arbitrary_distinguishable) {
                j["note"] = "ImpossibleByTraceTest: pairwise trace orthogonality fails, "
                            "so no certificate can exist";
            } else if (!rep.certificate && rep.unitary_bound_violated) {
                j["note"] = "bound violation: " + std::to_string(s.size()) +
                            " pairwise orthogonal unitary states exceed d = " +
                            std::to_string(s.d) + ", so no certificate can exist";
            } else if (!rep.certificate) {
                j["note"] = "no certificate found; the randomized search does not prove "
                            "non-existence";
            }
            emit(j, json_out);
            return rep.certificate ? kExitOk : kExitNegative;
        }

        if (se->parsed()) {
            const locc::StateSet s = locc::stateset_from_json(locc::load_json_file(search_input));
            locc::SearchConfig cfg;
            cfg.tol = tol;
            cfg.seed = seed;
            cfg.restarts = se_restarts;
            cfg.max_iters = se_max_iters;
            cfg.r = se_r;
            cfg.accept_residual = se_accept;
            const locc::SearchResult res = locc::search_certificate(s, cfg);
            emit(locc::search_result_to_json(res), json_out);
            return res.status == locc::SearchStatus::Found ? kExitOk : kExitNegative;
        }

        if (sim->parsed()) {
            const locc::StateSet s = locc::stateset_from_json(locc::load_json_file(sim_input));
            const locc::Certificate cert =
                locc::certificate_from_json(locc::load_json_file(cert_path));
            const locc::Protocol proto = locc::build_protocol(s, cert, tol);
            const locc::SimulationReport rep = locc::simulate(s, proto, trials, seed);
            emit(locc::simulation_report_to_json(rep), json_out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
