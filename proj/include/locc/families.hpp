// Named state-set generators used by the CLI and the test corpora.
#pragma once

#include "locc/certs.hpp"

#include <cstdint>
#include <string>

namespace locc {

/// Families: "paulis-x", "paulis-z", "paulis-all", "permutations-cyclic",
/// "random-unitary", "random-orthogonal-pair".  `n` <= 0 picks the
/// family's natural size.  Throws std::invalid_argument on unknown names
/// or bad dimensions.
StateSet make_family(const std::string& family, Index d, Index n = 0, std::uint64_t seed = 0);

}  // namespace locc
