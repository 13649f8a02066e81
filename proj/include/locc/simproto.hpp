// Executable one-way LOCC protocols built from certificates: Alice's
// rank-one measurement, Bob's conditioned projective effects, exact
// Born-rule success probability and Monte-Carlo sampling.
#pragma once

#include "locc/certs.hpp"
#include "locc/matrix.hpp"

#include <cstdint>
#include <vector>

namespace locc {

/// Alice's measurement (physical vectors, i.e. conjugated certificate
/// columns) plus, for each Alice outcome k, Bob's effects
/// B_{k,0..n-1} and a trailing inconclusive remainder B_{k,n}.
struct Protocol {
    AliceMeasurement alice;
    std::vector<std::vector<ComplexMatrix>> bob;

    /// Throws unless Alice and Bob effects are complete and PSD.
    void validate(const Tolerance& tol = {}) const;
};

/// Unnormalized conditional states d^{-1} M_i |conj(phi)><conj(phi)| M_i^*
/// on Bob's side after Alice obtains the outcome vector phi.
std::vector<ComplexMatrix> bob_residual_states(const StateSet& s, const StateVector& phi);

/// <psi|(A (x) B)|psi> for |psi> = (I (x) M)|Phi>, computed without
/// forming the d^2-dimensional state: Tr(M^* B M A^T) / d.
Complex born_expectation(const ComplexMatrix& m, const ComplexMatrix& a, const ComplexMatrix& b);

/// Builds the protocol of an accepted certificate.  Throws if the
/// verifier rejects.
Protocol build_protocol(const StateSet& s, const Certificate& c, const Tolerance& tol = {});

/// Same construction without the verifier gate (for studying imperfect
/// measurement choices).
Protocol build_protocol_unchecked(const StateSet& s, const ComplexMatrix& w,
                                  const Tolerance& tol = {});

/// (1/n) sum_{i,k} <psi_i| A_k (x) B_{k,i} |psi_i> on unit-normalized
/// states; equals 1 exactly for a perfect protocol.
double exact_success(const StateSet& s, const Protocol& p);

struct SimulationReport {
    long long trials = 0;
    long long success_count = 0;
    // confusion[i][j]: prepared i, concluded j; column n is inconclusive.
    std::vector<std::vector<long long>> confusion;
    double exact_success = 0.0;

    double frequency() const {
        return trials > 0 ? static_cast<double>(success_count) / static_cast<double>(trials) : 0.0;
    }
};

/// Samples `trials` uniformly prepared states through the protocol.
SimulationReport simulate(const StateSet& s, const Protocol& p, long long trials,
                          std::uint64_t seed);

}  // namespace locc
