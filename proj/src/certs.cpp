#include "locc/certs.hpp"

#include "locc/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locc {

void StateSet::validate() const {
    if (d < 1) throw std::invalid_argument("StateSet: d must be positive");
    if (matrices.empty()) throw std::invalid_argument("StateSet: empty set");
    for (const auto& m : matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw std::invalid_argument("StateSet: member is not d x d");
        }
        if (!m.allFinite()) throw std::invalid_argument("StateSet: non-finite entry");
    }
    if (!labels.empty() && static_cast<Index>(labels.size()) != size()) {
        throw std::invalid_argument("StateSet: label count mismatch");
    }
}

double AliceMeasurement::completeness_defect(Index d) const {
    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        acc += weights[k] * (vectors[k] * vectors[k].adjoint());
    }
    return max_abs(acc - ComplexMatrix::Identity(d, d));
}

bool LatinSquare::valid() const {
    if (d < 1 || static_cast<Index>(cells.size()) != d * d) return false;
    std::vector<bool> seen(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (Index j = 0; j < d; ++j) {
            const int v = at(i, j);
            if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)]) return false;
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }
    for (Index j = 0; j < d; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (Index i = 0; i < d; ++i) {
            const int v = at(i, j);
            if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)]) return false;
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }
    return true;
}

bool verify_arbitrary(const StateSet& s, const Tolerance& tol) {
    s.validate();
    const Index n = s.size();
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const ComplexMatrix prod = s.matrices[j].adjoint() * s.matrices[i];
            const double bound = tol.zero_abs * comparison_scale(prod) * static_cast<double>(s.d);
            if (std::abs(prod.trace()) > bound) return false;
        }
    }
    return true;
}

double certificate_residual(const StateSet& s, const ComplexMatrix& w) {
    double residual = 0.0;
    const Index n = s.size();
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            // The (j,i) product is the adjoint, so its diagonal has the
            // same magnitudes.
            const ComplexMatrix g = w.adjoint() * (s.matrices[j].adjoint() * s.matrices[i]) * w;
            residual = std::max(residual, g.diagonal().cwiseAbs().maxCoeff());
        }
    }
    return residual;
}

CertificateReport verify_oneway_certificate(const StateSet& s, const ComplexMatrix& w,
                                            const Tolerance& tol) {
    s.validate();
    if (w.rows() != s.d) throw std::invalid_argument("verify: W row count differs from d");
    if (w.cols() < w.rows()) throw std::invalid_argument("verify: W must be d x r with r >= d");

    CertificateReport rep;
    rep.coisometry_defect = coisometry_defect(w);
    rep.coisometry_ok = rep.coisometry_defect <= tol.zero_abs;

    double scale = 1.0;
    const Index n = s.size();
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const ComplexMatrix prod = s.matrices[j].adjoint() * s.matrices[i];
            scale = std::max(scale, max_abs(prod));
            const ComplexMatrix g = w.adjoint() * prod * w;
            for (Index k = 0; k < g.rows(); ++k) {
                rep.max_diag_residual = std::max(rep.max_diag_residual, std::abs(g(k, k)));
            }
        }
    }
    rep.accepted = rep.coisometry_ok && rep.max_diag_residual <= tol.zero_abs * scale;
    return rep;
}

Certificate alice_to_w(const AliceMeasurement& a, const Tolerance& tol) {
    if (a.weights.empty() || a.weights.size() != a.vectors.size()) {
        throw std::invalid_argument("alice_to_w: inconsistent measurement");
    }
    const Index d = a.vectors.front().size();
    for (const double m : a.weights) {
        if (!(m > 0.0)) throw std::invalid_argument("alice_to_w: weights must be positive");
    }
    if (a.completeness_defect(d) > tol.zero_abs) {
        throw std::invalid_argument("alice_to_w: completeness violated");
    }
    ComplexMatrix w(d, a.size());
    for (Index k = 0; k < a.size(); ++k) {
        w.col(k) = std::sqrt(a.weights[static_cast<std::size_t>(k)]) *
                   a.vectors[static_cast<std::size_t>(k)];
    }
    return Certificate{w, std::nullopt};
}

AliceMeasurement w_to_alice(const Certificate& c, const Tolerance& tol) {
    if (!is_coisometry(c.w, tol)) {
        throw std::invalid_argument("w_to_alice: W is not a co-isometry");
    }
    AliceMeasurement a;
    for (Index k = 0; k < c.w.cols(); ++k) {
        const double m = c.w.col(k).squaredNorm();
        if (m <= tol.zero_abs) continue;  // drop zero columns
        a.weights.push_back(m);
        a.vectors.push_back(c.w.col(k) / std::sqrt(m));
    }
    return a;
}

bool is_permutation_matrix(const ComplexMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols() || m.rows() < 1) return false;
    const Index d = m.rows();
    std::vector<int> row_ones(static_cast<std::size_t>(d), 0);
    std::vector<int> col_ones(static_cast<std::size_t>(d), 0);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const double v = std::abs(m(i, j));
            if (std::abs(m(i, j) - Complex{1.0, 0.0}) <= tol.zero_abs) {
                ++row_ones[static_cast<std::size_t>(i)];
                ++col_ones[static_cast<std::size_t>(j)];
            } else if (v > tol.zero_abs) {
                return false;
            }
        }
    }
    for (Index i = 0; i < d; ++i) {
        if (row_ones[static_cast<std::size_t>(i)] != 1 || col_ones[static_cast<std::size_t>(i)] != 1) {
            return false;
        }
    }
    return true;
}

PermutationAnalysis permutation_analysis(const std::vector<ComplexMatrix>& perms,
                                         const Tolerance& tol) {
    if (perms.empty()) throw std::invalid_argument("permutation_analysis: empty family");
    const Index d = perms.front().rows();
    for (const auto& p : perms) {
        if (p.rows() != d || p.cols() != d || !is_permutation_matrix(p, tol)) {
            throw std::invalid_argument("permutation_analysis: input is not a permutation matrix");
        }
    }
    const Index n = static_cast<Index>(perms.size());

    PermutationAnalysis out;
    out.distinguishable = true;
    for (Index i = 0; i < n && out.distinguishable; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const ComplexMatrix prod = perms[static_cast<std::size_t>(j)].adjoint() *
                                       perms[static_cast<std::size_t>(i)];
            if (max_abs(delta_map(prod)) > tol.zero_abs) {
                out.distinguishable = false;
                break;
            }
        }
    }
    if (!out.distinguishable) return out;

    StateSet set;
    set.d = d;
    set.matrices = perms;
    Certificate cert{ComplexMatrix::Identity(d, d), std::nullopt};
    cert.residual = certificate_residual(set, cert.w);
    out.certificate = std::move(cert);

    if (n == d) {
        LatinSquare latin;
        latin.d = d;
        latin.cells.assign(static_cast<std::size_t>(d * d), 0);
        for (Index k = 0; k < n; ++k) {
            const ComplexMatrix& p = perms[static_cast<std::size_t>(k)];
            for (Index i = 0; i < d; ++i) {
                for (Index j = 0; j < d; ++j) {
                    if (std::abs(p(i, j) - Complex{1.0, 0.0}) <= tol.zero_abs) {
                        latin.cells[static_cast<std::size_t>(i * d + j)] = static_cast<int>(k) + 1;
                    }
                }
            }
        }
        out.latin = std::move(latin);
    }
    return out;
}

std::optional<SchmidtDecomposition> simultaneous_schmidt(const StateSet& s, const Tolerance& tol,
                                                         std::uint64_t seed) {
    s.validate();
    const Index n = s.size();
    constexpr int kAttempts = 8;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Rng rng(derived_seed(seed, static_cast<std::uint64_t>(attempt)));
        ComplexMatrix t = s.matrices.front();
        for (Index k = 1; k < n; ++k) {
            t += complex_gaussian(rng) * s.matrices[static_cast<std::size_t>(k)];
        }
        Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const ComplexMatrix u = svd.matrixU();
        const ComplexMatrix ve = svd.matrixV();  // t = u * S * ve^*

        bool ok = true;
        std::vector<ComplexMatrix> diagonals;
        diagonals.reserve(static_cast<std::size_t>(n));
        for (Index k = 0; k < n && ok; ++k) {
            const ComplexMatrix& m = s.matrices[static_cast<std::size_t>(k)];
            const ComplexMatrix d_k = u.adjoint() * m * ve;
            const double off = max_abs(d_k - delta_map(d_k));
            if (off > tol.zero_abs * comparison_scale(m)) {
                ok = false;
            } else {
                diagonals.push_back(delta_map(d_k));
            }
        }
        if (ok) {
            return SchmidtDecomposition{u, std::move(diagonals), ve.adjoint()};
        }
    }
    return std::nullopt;
}

Certificate schmidt_to_certificate(const ComplexMatrix& v, const Tolerance& tol) {
    if (v.rows() != v.cols()) throw std::invalid_argument("schmidt_to_certificate: V not square");
    const Index d = v.rows();
    if (max_abs(v.adjoint() * v - ComplexMatrix::Identity(d, d)) > tol.zero_abs) {
        throw std::invalid_argument("schmidt_to_certificate: V not unitary");
    }
    return Certificate{v.adjoint() * fourier_matrix(d), std::nullopt};
}

namespace {

// Unit c in C^2 with c^* B c ~ 0.  Valid whenever 0 lies in the numerical
// range of B; small violations of that premise are clamped.  Splits B into
// Hermitian and skew parts: an equalizing combination of the eigenvectors
// of one part kills its form, and the remaining relative phase kills the
// other.
Eigen::Vector2cd zero_form_vector_2x2(const Eigen::Matrix2cd& b) {
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    const Eigen::Matrix2cd h = 0.5 * (b + b.adjoint());
    const Eigen::Matrix2cd k = (b - b.adjoint()) / Complex{0.0, 2.0};

    const bool h_tiny = h.cwiseAbs().maxCoeff() <= 1e-13 * scale;
    const Eigen::Matrix2cd& primary = h_tiny ? k : h;
    const Eigen::Matrix2cd& secondary = h_tiny ? h : k;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(primary);
    const double e1 = es.eigenvalues()(0);
    const double e2 = es.eigenvalues()(1);
    const Eigen::Vector2cd u1 = es.eigenvectors().col(0);
    const Eigen::Vector2cd u2 = es.eigenvectors().col(1);

    double t = 0.0;  // squared weight on u2, so that (1-t) e1 + t e2 = 0
    if (e2 - e1 > 1e-300) t = std::clamp(-e1 / (e2 - e1), 0.0, 1.0);
    const double alpha = std::sqrt(1.0 - t);
    const double beta = std::sqrt(t);

    const double s11 = std::real((u1.adjoint() * secondary * u1)(0));
    const double s22 = std::real((u2.adjoint() * secondary * u2)(0));
    const Complex cross = (u1.adjoint() * secondary * u2)(0);
    const double residual = alpha * alpha * s11 + beta * beta * s22;

    double phi = 0.0;
    const double denom = 2.0 * alpha * beta * std::abs(cross);
    if (denom > 1e-300) {
        const double x = std::clamp(-residual / denom, -1.0, 1.0);
        phi = std::acos(x) - std::arg(cross);
    }
    Eigen::Vector2cd v = alpha * u1 + beta * std::polar(1.0, phi) * u2;
    v.normalize();
    return v;
}

// Unit v with v^* m v ~ 0 for a trace-centered matrix m.  The diagonal
// entries average to zero, so their running means trace a path to the
// origin that stays inside the numerical range; each step is realized by
// a 2x2 solve on span{current vector, next basis vector}.
StateVector zero_quadratic_vector(const ComplexMatrix& m) {
    const Index d = m.rows();
    const double scale = comparison_scale(m);

    for (Index i = 0; i < d; ++i) {
        if (std::abs(m(i, i)) <= 1e-13 * scale) {
            StateVector e = StateVector::Zero(d);
            e(i) = 1.0;
            return e;
        }
    }

    StateVector v = StateVector::Zero(d);
    v(0) = 1.0;
    Complex current = m(0, 0);
    Complex partial_sum = m(0, 0);
    for (Index i = 1; i < d; ++i) {
        partial_sum += m(i, i);
        const Complex target =
            (i == d - 1) ? Complex{0.0, 0.0} : partial_sum / static_cast<double>(i + 1);

        StateVector e = StateVector::Zero(d);
        e(i) = 1.0;
        Eigen::Matrix2cd b;
        b(0, 0) = current - target;
        b(0, 1) = (v.adjoint() * m * e)(0);
        b(1, 0) = (e.adjoint() * m * v)(0);
        b(1, 1) = m(i, i) - target;
        const Eigen::Vector2cd c = zero_form_vector_2x2(b);

        v = c(0) * v + c(1) * e;
        v.normalize();
        current = (v.adjoint() * m * v)(0);
    }
    return v;
}

// Unitary Q with Q e_0 = v, built from one Householder reflector.
ComplexMatrix householder_from_first_column(const StateVector& v) {
    const Index d = v.size();
    const double head = std::abs(v(0));
    const Complex gamma = head > 0.0 ? v(0) / head : Complex{1.0, 0.0};
    StateVector u = v;
    u(0) += gamma;
    ComplexMatrix q = ComplexMatrix::Identity(d, d) - (2.0 / u.squaredNorm()) * (u * u.adjoint());
    q.col(0) *= -gamma;  // reflector maps v to -gamma e_0, fix the phase
    return q;
}

ComplexMatrix fillmore_recurse(ComplexMatrix m) {
    const Index d = m.rows();
    if (d == 1) return ComplexMatrix::Identity(1, 1);
    // remove trace dust inherited from the parent compression
    m -= (m.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);

    const StateVector v = zero_quadratic_vector(m);
    const ComplexMatrix q = householder_from_first_column(v);
    const ComplexMatrix conj = q.adjoint() * m * q;
    const ComplexMatrix tail = fillmore_recurse(conj.block(1, 1, d - 1, d - 1));

    ComplexMatrix full = q;
    full.rightCols(d - 1) = q.rightCols(d - 1) * tail;
    return full;
}

}  // namespace

ComplexMatrix fillmore_zero_diagonal(const ComplexMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("fillmore_zero_diagonal: matrix must be square");
    }
    const Index d = m.rows();
    const double bound = tol.zero_abs * comparison_scale(m) * static_cast<double>(d);
    if (std::abs(m.trace()) > bound) {
        throw std::invalid_argument("fillmore_zero_diagonal: trace is not zero");
    }
    if (max_abs(m) == 0.0) return ComplexMatrix::Identity(d, d);
    return fillmore_recurse(m);
}

Certificate two_state_certificate(const ComplexMatrix& m1, const ComplexMatrix& m2,
                                  const Tolerance& tol) {
    if (m1.rows() != m1.cols() || m1.rows() != m2.rows() || m2.rows() != m2.cols()) {
        throw std::invalid_argument("two_state_certificate: matrices must be square, same size");
    }
    const ComplexMatrix prod = m2.adjoint() * m1;
    const double bound = tol.zero_abs * comparison_scale(prod) * static_cast<double>(prod.rows());
    if (std::abs(prod.trace()) > bound) {
        throw std::invalid_argument("two_state_certificate: states are not orthogonal");
    }
    Certificate cert{fillmore_zero_diagonal(prod, tol), std::nullopt};
    StateSet set;
    set.d = m1.rows();
    set.matrices = {m1, m2};
    cert.residual = certificate_residual(set, cert.w);
    return cert;
}

}  // namespace locc
