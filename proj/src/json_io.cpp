#include "locc/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace locc {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::runtime_error("JSON: complex scalar must be a [re, im] pair");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::runtime_error("JSON: complex scalar must be finite");
    }
    return Complex{re, im};
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw std::runtime_error("JSON: matrix needs rows, cols, entries");
    }
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    if (rows < 1 || cols < 1) throw std::runtime_error("JSON: matrix dimensions must be positive");
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<Index>(entries.size()) != rows * cols) {
        throw std::runtime_error("JSON: entry count does not match rows x cols");
    }
    ComplexMatrix m(rows, cols);
    Index pos = 0;
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(entries[static_cast<std::size_t>(pos++)]);
        }
    }
    return m;
}

Json vector_to_json(const StateVector& v) {
    Json amps = Json::array();
    for (Index i = 0; i < v.size(); ++i) amps.push_back(complex_to_json(v(i)));
    return Json{{"dim", v.size()}, {"amplitudes", std::move(amps)}};
}

StateVector vector_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("amplitudes")) {
        throw std::runtime_error("JSON: vector needs dim and amplitudes");
    }
    const auto dim = j.at("dim").get<Index>();
    const Json& amps = j.at("amplitudes");
    if (dim < 1 || !amps.is_array() || static_cast<Index>(amps.size()) != dim) {
        throw std::runtime_error("JSON: amplitude count does not match dim");
    }
    StateVector v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
    return v;
}

Json stateset_to_json(const StateSet& s) {
    Json mats = Json::array();
    for (const auto& m : s.matrices) mats.push_back(matrix_to_json(m));
    Json j{{"d", s.d}, {"matrices", std::move(mats)}};
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j;
}

StateSet stateset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("matrices")) {
        throw std::runtime_error("JSON: state set needs d and matrices");
    }
    StateSet s;
    s.d = j.at("d").get<Index>();
    for (const Json& m : j.at("matrices")) s.matrices.push_back(matrix_from_json(m));
    if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
    s.validate();
    return s;
}

Json certificate_to_json(const Certificate& c) {
    Json j{{"W", matrix_to_json(c.w)}};
    if (c.residual) j["residual"] = *c.residual;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("W")) throw std::runtime_error("JSON: certificate needs W");
    Certificate c{matrix_from_json(j.at("W")), std::nullopt};
    if (j.contains("residual") && j.at("residual").is_number()) {
        c.residual = j.at("residual").get<double>();
    }
    return c;
}

Json latin_to_json(const LatinSquare& l) {
    Json rows = Json::array();
    for (Index i = 0; i < l.d; ++i) {
        Json row = Json::array();
        for (Index j = 0; j < l.d; ++j) row.push_back(l.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"d", l.d}, {"cells", std::move(rows)}};
}

Json simulation_report_to_json(const SimulationReport& r) {
    return Json{{"trials", r.trials},
                {"success_count", r.success_count},
                {"confusion", r.confusion},
                {"exact_success", r.exact_success},
                {"frequency", r.frequency()}};
}

Json search_result_to_json(const SearchResult& r) {
    Json j;
    switch (r.status) {
        case SearchStatus::Found: j["status"] = "found"; break;
        case SearchStatus::NotFound: j["status"] = "not-found"; break;
        case SearchStatus::ImpossibleByTraceTest: j["status"] = "impossible-by-trace-test"; break;
    }
    j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
    j["construction"] = r.construction;
    j["restarts_used"] = r.restarts_used;
    j["best_objective"] = std::isfinite(r.best_objective) ? Json(r.best_objective) : Json(nullptr);
    j["objective_trace"] = r.objective_trace;
    if (r.status == SearchStatus::NotFound) {
        j["note"] = "not-found is advisory: the randomized search does not prove non-existence";
    }
    return j;
}

Json analysis_report_to_json(const AnalysisReport& r) {
    Json j;
    j["arbitrary_distinguishable"] = r.arbitrary_distinguishable;
    j["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
    j["construction_used"] = r.construction_used;
    j["latin_square"] = r.latin ? latin_to_json(*r.latin) : Json(nullptr);
    j["exact_success"] = r.exact_success ? Json(*r.exact_success) : Json(nullptr);
    j["unitary_bound_violated"] = r.unitary_bound_violated;

    Json os;
    os["dim"] = r.opsys_dim;
    os["algebra"] = r.algebra_closed;
    os["separating_vector"] =
        r.separating.found() ? vector_to_json(*r.separating.vector) : Json(nullptr);
    os["separating_status"] = r.separating.reason;
    os["max_rank_observed"] = r.separating.max_rank_observed;
    j["operator_system"] = std::move(os);

    Json b;
    b["orthogonal"] = r.bounds.orthogonal;
    b["n"] = r.bounds.n;
    b["d"] = r.bounds.d;
    b["ranks"] = r.bounds.ranks;
    b["sum_ranks"] = r.bounds.sum_ranks;
    b["bound"] = r.bounds.bound;
    b["slack"] = r.bounds.slack;
    b["generic"] = r.bounds.generic;
    b["preconditions_ok"] = r.bounds.preconditions_ok;
    b["holds"] = r.bounds.bound_holds;
    j["bounds"] = std::move(b);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("failed to parse '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace locc
