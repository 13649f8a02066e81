#include "locc/families.hpp"

#include "locc/random.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

namespace {

StateSet pauli_powers(Index d, Index n, const ComplexMatrix& gen, const std::string& symbol) {
    StateSet s;
    s.d = d;
    ComplexMatrix acc = ComplexMatrix::Identity(d, d);
    for (Index k = 0; k < n; ++k) {
        s.matrices.push_back(acc);
        s.labels.push_back(symbol + "^" + std::to_string(k));
        acc = gen * acc;
    }
    return s;
}

}  // namespace

StateSet make_family(const std::string& family, Index d, Index n, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("make_family: d must be positive");
    Rng rng(derived_seed(seed, 0x66616dULL));

    if (family == "paulis-x") {
        return pauli_powers(d, n > 0 ? n : d, gen_pauli_x(d), "X");
    }
    if (family == "paulis-z") {
        return pauli_powers(d, n > 0 ? n : d, gen_pauli_z(d), "Z");
    }
    if (family == "paulis-all") {
        StateSet s;
        s.d = d;
        const ComplexMatrix x = gen_pauli_x(d);
        const ComplexMatrix z = gen_pauli_z(d);
        ComplexMatrix xa = ComplexMatrix::Identity(d, d);
        for (Index a = 0; a < d; ++a) {
            ComplexMatrix m = xa;
            for (Index b = 0; b < d; ++b) {
                s.matrices.push_back(m);
                s.labels.push_back("X^" + std::to_string(a) + "Z^" + std::to_string(b));
                m = m * z;
            }
            xa = x * xa;
        }
        return s;
    }
    if (family == "permutations-cyclic") {
        StateSet s;
        s.d = d;
        const ComplexMatrix p = random_cycle_permutation(d, rng);
        ComplexMatrix acc = ComplexMatrix::Identity(d, d);
        const Index count = n > 0 ? n : d;
        for (Index k = 0; k < count; ++k) {
            s.matrices.push_back(acc);
            s.labels.push_back("P^" + std::to_string(k));
            acc = p * acc;
        }
        return s;
    }
    if (family == "random-unitary") {
        StateSet s;
        s.d = d;
        const Index count = n > 0 ? n : d;
        for (Index k = 0; k < count; ++k) {
            s.matrices.push_back(haar_unitary(d, rng));
            s.labels.push_back("U_" + std::to_string(k));
        }
        return s;
    }
    if (family == "random-orthogonal-pair") {
        StateSet s;
        s.d = d;
        ComplexMatrix m1 = gaussian_matrix(d, d, rng);
        ComplexMatrix m2 = gaussian_matrix(d, d, rng);
        // remove the HS component of m2 along m1 so Tr(M2^* M1) = 0
        const Complex overlap = hs_inner(m2, m1) / hs_inner(m1, m1);
        m2 -= overlap * m1;
        s.matrices = {std::move(m1), std::move(m2)};
        s.labels = {"M1", "M2"};
        return s;
    }
    throw std::invalid_argument("make_family: unknown family '" + family + "'");
}

}  // namespace locc
