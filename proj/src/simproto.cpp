#include "locc/simproto.hpp"

#include "locc/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locc {

void Protocol::validate(const Tolerance& tol) const {
    if (alice.weights.empty() || alice.weights.size() != alice.vectors.size()) {
        throw std::invalid_argument("Protocol: inconsistent Alice measurement");
    }
    const Index d = alice.vectors.front().size();
    if (alice.completeness_defect(d) > 1e-9) {
        throw std::invalid_argument("Protocol: Alice measurement incomplete");
    }
    if (bob.size() != alice.weights.size()) {
        throw std::invalid_argument("Protocol: Bob effect count differs from Alice outcomes");
    }
    for (const auto& effects : bob) {
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        for (const auto& e : effects) {
            if (e.rows() != d || e.cols() != d) {
                throw std::invalid_argument("Protocol: Bob effect has wrong shape");
            }
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(e, Eigen::EigenvaluesOnly);
            if (es.eigenvalues()(0) < -1e-10) {
                throw std::invalid_argument("Protocol: Bob effect is not PSD");
            }
            total += e;
        }
        if (max_abs(total - ComplexMatrix::Identity(d, d)) > 1e-9) {
            throw std::invalid_argument("Protocol: Bob effects incomplete");
        }
    }
    (void)tol;
}

std::vector<ComplexMatrix> bob_residual_states(const StateSet& s, const StateVector& phi) {
    s.validate();
    if (phi.size() != s.d) throw std::invalid_argument("bob_residual_states: wrong vector size");
    const StateVector phi_bar = phi.conjugate();
    std::vector<ComplexMatrix> out;
    out.reserve(s.matrices.size());
    const double inv_d = 1.0 / static_cast<double>(s.d);
    for (const auto& m : s.matrices) {
        const StateVector b = m * phi_bar;
        out.push_back(inv_d * (b * b.adjoint()));
    }
    return out;
}

Complex born_expectation(const ComplexMatrix& m, const ComplexMatrix& a, const ComplexMatrix& b) {
    if (m.rows() != m.cols() || a.rows() != a.cols() || b.rows() != b.cols() ||
        m.rows() != a.rows() || m.rows() != b.rows()) {
        throw std::invalid_argument("born_expectation: all matrices must be d x d");
    }
    const double d = static_cast<double>(m.rows());
    return (m.adjoint() * b * m * a.transpose()).trace() / d;
}

Protocol build_protocol_unchecked(const StateSet& s, const ComplexMatrix& w,
                                  const Tolerance& tol) {
    s.validate();
    const Index d = s.d;
    const Index n = s.size();

    Certificate cert{w, std::nullopt};
    AliceMeasurement columns = w_to_alice(cert, tol);

    Protocol proto;
    proto.alice.weights = columns.weights;
    for (const auto& phi : columns.vectors) {
        // the physical measurement vector is the conjugate of the column
        proto.alice.vectors.push_back(phi.conjugate());
    }

    for (Index k = 0; k < columns.size(); ++k) {
        const StateVector& phi = columns.vectors[static_cast<std::size_t>(k)];
        std::vector<ComplexMatrix> effects;
        std::vector<StateVector> frame;  // orthonormal directions used so far
        ComplexMatrix used = ComplexMatrix::Zero(d, d);
        for (Index i = 0; i < n; ++i) {
            StateVector b = s.matrices[static_cast<std::size_t>(i)] * phi;
            const double raw = b.norm();
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& f : frame) b -= f.dot(b) * f;
            }
            if (raw <= 1e-12 || b.norm() <= 1e-10 * raw) {
                effects.push_back(ComplexMatrix::Zero(d, d));
                continue;
            }
            b.normalize();
            frame.push_back(b);
            effects.push_back(b * b.adjoint());
            used += effects.back();
        }
        // inconclusive remainder, clamped onto the PSD cone
        ComplexMatrix rest = ComplexMatrix::Identity(d, d) - used;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rest);
        Eigen::VectorXd ev = es.eigenvalues();
        for (Index i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), 0.0);
        effects.push_back(es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint());
        proto.bob.push_back(std::move(effects));
    }
    proto.validate(tol);
    return proto;
}

Protocol build_protocol(const StateSet& s, const Certificate& c, const Tolerance& tol) {
    const CertificateReport rep = verify_oneway_certificate(s, c.w, tol);
    if (!rep.accepted) {
        throw std::invalid_argument("build_protocol: certificate rejected by verifier");
    }
    return build_protocol_unchecked(s, c.w, tol);
}

double exact_success(const StateSet& s, const Protocol& p) {
    s.validate();
    const Index n = s.size();
    if (static_cast<Index>(p.bob.size()) != static_cast<Index>(p.alice.weights.size())) {
        throw std::invalid_argument("exact_success: malformed protocol");
    }
    double total = 0.0;
    for (Index i = 0; i < n; ++i) {
        const ComplexMatrix& m = s.matrices[static_cast<std::size_t>(i)];
        const double norm2 = std::real((m.adjoint() * m).trace());
        if (norm2 <= 0.0) throw std::invalid_argument("exact_success: zero state");
        for (std::size_t k = 0; k < p.alice.weights.size(); ++k) {
            const ComplexMatrix a = p.alice.weights[k] *
                                    (p.alice.vectors[k] * p.alice.vectors[k].adjoint());
            const ComplexMatrix& b = p.bob[k][static_cast<std::size_t>(i)];
            // born_expectation already divides by d; the state norm is
            // Tr(M^* M)/d, so the d's cancel.
            total += std::real(born_expectation(m, a, b)) * static_cast<double>(s.d) / norm2;
        }
    }
    return total / static_cast<double>(n);
}

SimulationReport simulate(const StateSet& s, const Protocol& p, long long trials,
                          std::uint64_t seed) {
    s.validate();
    if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    const Index n = s.size();
    const Index outcomes = static_cast<Index>(p.alice.weights.size());

    // Precompute Alice's outcome distribution per prepared state and
    // Bob's outcome distribution per (state, Alice outcome).
    std::vector<std::vector<double>> alice_cum(static_cast<std::size_t>(n));
    std::vector<std::vector<std::vector<double>>> bob_cum(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const ComplexMatrix& m = s.matrices[static_cast<std::size_t>(i)];
        const double norm2 = std::real((m.adjoint() * m).trace());
        std::vector<double> probs(static_cast<std::size_t>(outcomes), 0.0);
        bob_cum[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(outcomes));
        for (Index k = 0; k < outcomes; ++k) {
            const StateVector bar = p.alice.vectors[static_cast<std::size_t>(k)].conjugate();
            const StateVector residual = m * bar;
            double pk = p.alice.weights[static_cast<std::size_t>(k)] * residual.squaredNorm() / norm2;
            if (pk < 1e-14) pk = 0.0;
            probs[static_cast<std::size_t>(k)] = pk;
            auto& row = bob_cum[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            row.assign(p.bob[static_cast<std::size_t>(k)].size(), 0.0);
            if (pk > 0.0) {
                const StateVector u = residual.normalized();
                double acc = 0.0;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    double q = std::real(
                        (u.adjoint() * p.bob[static_cast<std::size_t>(k)][j] * u)(0));
                    if (q < 1e-14) q = 0.0;
                    acc += q;
                    row[j] = acc;
                }
                for (double& x : row) x /= acc;
            } else {
                // unreachable outcome: park the mass on the inconclusive label
                row.back() = 1.0;
            }
        }
        double acc = 0.0;
        auto& arow = alice_cum[static_cast<std::size_t>(i)];
        arow.assign(probs.size(), 0.0);
        for (std::size_t k = 0; k < probs.size(); ++k) {
            acc += probs[k];
            arow[k] = acc;
        }
        for (double& x : arow) x /= acc;
    }

    SimulationReport rep;
    rep.trials = trials;
    rep.confusion.assign(static_cast<std::size_t>(n),
                         std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    rep.exact_success = exact_success(s, p);

    Rng rng(derived_seed(seed, 0x73696dULL));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto sample_from = [&](const std::vector<double>& cum) -> std::size_t {
        const double x = uni(rng);
        for (std::size_t idx = 0; idx < cum.size(); ++idx) {
            if (x <= cum[idx]) return idx;
        }
        return cum.size() - 1;
    };

    std::uniform_int_distribution<Index> pick_state(0, n - 1);
    for (long long t = 0; t < trials; ++t) {
        const Index i = pick_state(rng);
        const std::size_t k = sample_from(alice_cum[static_cast<std::size_t>(i)]);
        const std::size_t j = sample_from(bob_cum[static_cast<std::size_t>(i)][k]);
        ++rep.confusion[static_cast<std::size_t>(i)][j];
        if (static_cast<Index>(j) == i) ++rep.success_count;
    }
    return rep;
}

}  // namespace locc
