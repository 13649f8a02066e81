// JSON wire formats.  Complex scalars are [re, im] pairs; matrices are
// row-major {"rows", "cols", "entries"}.  Parsers reject shape or length
// mismatches and non-finite values.
#pragma once

#include "locc/analyze.hpp"
#include "locc/certs.hpp"
#include "locc/search.hpp"
#include "locc/simproto.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace locc {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const StateVector& v);
StateVector vector_from_json(const Json& j);

Json stateset_to_json(const StateSet& s);
StateSet stateset_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json latin_to_json(const LatinSquare& l);

Json simulation_report_to_json(const SimulationReport& r);
Json search_result_to_json(const SearchResult& r);
Json analysis_report_to_json(const AnalysisReport& r);

/// Parses a file; throws std::runtime_error with a readable message on
/// I/O or schema problems.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace locc
