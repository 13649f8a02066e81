#include "locc/search.hpp"

#include "locc/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locc {

namespace {

std::vector<ComplexMatrix> ordered_products(const StateSet& s) {
    std::vector<ComplexMatrix> prods;
    const Index n = s.size();
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i == j) continue;
            prods.push_back(s.matrices[static_cast<std::size_t>(j)].adjoint() *
                            s.matrices[static_cast<std::size_t>(i)]);
        }
    }
    return prods;
}

double objective_from_products(const ComplexMatrix& w, const std::vector<ComplexMatrix>& prods) {
    double total = 0.0;
    for (const auto& a : prods) {
        const ComplexMatrix g = w.adjoint() * a * w;
        for (Index k = 0; k < g.rows(); ++k) total += std::norm(g(k, k));
    }
    return total;
}

ComplexMatrix gradient_from_products(const ComplexMatrix& w,
                                     const std::vector<ComplexMatrix>& prods) {
    ComplexMatrix grad = ComplexMatrix::Zero(w.rows(), w.cols());
    for (const auto& a : prods) {
        const ComplexMatrix aw = a * w;
        const ComplexMatrix ahw = a.adjoint() * w;
        for (Index k = 0; k < w.cols(); ++k) {
            const Complex z = w.col(k).dot(aw.col(k));  // w_k^* A w_k
            grad.col(k) += std::conj(z) * aw.col(k) + z * ahw.col(k);
        }
    }
    return grad;
}

}  // namespace

double objective(const ComplexMatrix& w, const StateSet& s) {
    s.validate();
    if (w.rows() != s.d) throw std::invalid_argument("objective: W row count differs from d");
    return objective_from_products(w, ordered_products(s));
}

ComplexMatrix objective_gradient(const ComplexMatrix& w, const StateSet& s) {
    s.validate();
    if (w.rows() != s.d) throw std::invalid_argument("objective_gradient: shape mismatch");
    return gradient_from_products(w, ordered_products(s));
}

ComplexMatrix polar_retract(const ComplexMatrix& w) {
    const ComplexMatrix gram = w * w.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
    const Eigen::VectorXd ev = es.eigenvalues();
    if (ev(0) <= 1e-14 * std::max(1.0, ev(ev.size() - 1))) {
        throw std::runtime_error("polar_retract: row-rank-deficient iterate");
    }
    ComplexMatrix inv_sqrt = es.eigenvectors() *
                             ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                             es.eigenvectors().adjoint();
    return inv_sqrt * w;
}

std::vector<Candidate> structured_candidates(const StateSet& s, std::uint64_t seed) {
    s.validate();
    const Index d = s.d;
    const Index n = s.size();
    std::vector<Candidate> out;
    out.push_back({"identity", ComplexMatrix::Identity(d, d)});
    out.push_back({"schmidt_fourier", fourier_matrix(d)});

    if (auto dec = simultaneous_schmidt(s, {}, seed)) {
        out.push_back({"schmidt_fourier", dec->v.adjoint() * fourier_matrix(d)});
    }
    if (n == 2) {
        try {
            out.push_back(
                {"fillmore", two_state_certificate(s.matrices[0], s.matrices[1]).w});
        } catch (const std::invalid_argument&) {
            // pair not trace-orthogonal; no candidate from this route
        }
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const ComplexMatrix a = s.matrices[static_cast<std::size_t>(j)].adjoint() *
                                    s.matrices[static_cast<std::size_t>(i)];
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (a + a.adjoint()));
            out.push_back({"hermitian_eigenbasis", es.eigenvectors()});
        }
    }
    return out;
}

SearchResult search_certificate(const StateSet& s, const SearchConfig& cfg) {
    s.validate();
    SearchResult result;
    if (!verify_arbitrary(s, cfg.tol)) {
        result.status = SearchStatus::ImpossibleByTraceTest;
        return result;
    }

    const Index d = s.d;
    const std::vector<ComplexMatrix> prods = ordered_products(s);

    auto try_accept = [&](const ComplexMatrix& w, const std::string& kind,
                          std::vector<double> trace, int restarts_used) -> bool {
        const double obj = objective_from_products(w, prods);
        result.best_objective = std::min(result.best_objective, obj);
        if (obj > cfg.accept_residual) return false;
        const CertificateReport rep = verify_oneway_certificate(s, w, cfg.tol);
        if (!rep.accepted) return false;
        Certificate cert{w, rep.max_diag_residual};
        result.status = SearchStatus::Found;
        result.certificate = std::move(cert);
        result.construction = kind;
        result.objective_trace = std::move(trace);
        result.restarts_used = restarts_used;
        return true;
    };

    if (cfg.use_structured) {
        for (const auto& cand : structured_candidates(s, cfg.seed)) {
            if (try_accept(cand.w, cand.kind, {objective_from_products(cand.w, prods)}, 0)) {
                return result;
            }
        }
    }

    std::vector<Index> schedule;
    if (cfg.r > 0) {
        if (cfg.r < d) throw std::invalid_argument("search_certificate: r must be >= d");
        schedule.push_back(cfg.r);
    } else {
        for (Index r = d; r <= 2 * d; ++r) schedule.push_back(r);
    }

    int restarts_used = 0;
    std::vector<double> best_trace;
    for (const Index r : schedule) {
        for (int restart = 0; restart < cfg.restarts; ++restart) {
            ++restarts_used;
            Rng rng(derived_seed(cfg.seed, static_cast<std::uint64_t>(r) * 7919u +
                                               static_cast<std::uint64_t>(restart)));
            ComplexMatrix w = haar_coisometry(d, r, rng);
            double f = objective_from_products(w, prods);
            std::vector<double> trace{f};
            double step = cfg.step;

            for (int iter = 0; iter < cfg.max_iters; ++iter) {
                const ComplexMatrix grad = gradient_from_products(w, prods);
                const double gnorm2 = grad.squaredNorm();
                if (gnorm2 <= 1e-30) break;

                bool moved = false;
                double t = step;
                while (t >= 1e-16) {
                    ComplexMatrix next;
                    try {
                        next = polar_retract(w - t * grad);
                    } catch (const std::runtime_error&) {
                        t *= 0.5;
                        continue;
                    }
                    const double fnext = objective_from_products(next, prods);
                    // Armijo condition on the retracted point.
                    if (fnext <= f - 1e-4 * t * gnorm2) {
                        w = std::move(next);
                        f = fnext;
                        moved = true;
                        break;
                    }
                    t *= 0.5;
                }
                if (!moved) break;
                step = std::min(t * 2.0, 1.0);
                trace.push_back(f);
                result.max_coisometry_defect =
                    std::max(result.max_coisometry_defect, coisometry_defect(w));
                if (f <= 1e-22) break;
            }

            result.best_objective = std::min(result.best_objective, f);
            if (f <= cfg.accept_residual &&
                try_accept(w, "descent", trace, restarts_used)) {
                return result;
            }
            if (best_trace.empty() || (!trace.empty() && trace.back() < best_trace.back())) {
                best_trace = std::move(trace);
            }
        }
    }

    result.status = SearchStatus::NotFound;
    result.restarts_used = restarts_used;
    result.objective_trace = std::move(best_trace);
    return result;
}

}  // namespace locc
