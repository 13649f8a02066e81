#include "locc/matrix.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace locc {

ComplexMatrix delta_map(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("delta_map: matrix must be square");
    }
    ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
    out.diagonal() = m.diagonal();
    return out;
}

StateVector vec_op(const ComplexMatrix& a) {
    StateVector v(a.size());
    Index pos = 0;
    for (Index c = 0; c < a.cols(); ++c) {
        v.segment(pos, a.rows()) = a.col(c);
        pos += a.rows();
    }
    return v;
}

ComplexMatrix fourier_matrix(Index d) {
    if (d < 1) throw std::invalid_argument("fourier_matrix: d must be positive");
    ComplexMatrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index j = 0; j < d; ++j) {
        for (Index k = 0; k < d; ++k) {
            // Reduce j*k mod d before forming the angle to keep phases exact-ish.
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
            f(j, k) = norm * Complex{std::cos(angle), std::sin(angle)};
        }
    }
    return f;
}

ComplexMatrix gen_pauli_x(Index d) {
    if (d < 1) throw std::invalid_argument("gen_pauli_x: d must be positive");
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
    return x;
}

ComplexMatrix gen_pauli_z(Index d) {
    if (d < 1) throw std::invalid_argument("gen_pauli_z: d must be positive");
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
        z(k, k) = Complex{std::cos(angle), std::sin(angle)};
    }
    return z;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("hs_inner: shape mismatch");
    }
    return (b.adjoint() * a).trace();
}

double coisometry_defect(const ComplexMatrix& w) {
    const ComplexMatrix g = w * w.adjoint();
    return max_abs(g - ComplexMatrix::Identity(w.rows(), w.rows()));
}

bool is_coisometry(const ComplexMatrix& w, const Tolerance& tol) {
    if (w.cols() < w.rows()) {
        throw std::invalid_argument("is_coisometry: W must be d x r with r >= d");
    }
    return coisometry_defect(w) <= tol.zero_abs * comparison_scale(w * w.adjoint());
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

Index numerical_rank(const ComplexMatrix& m, const Tolerance& tol) {
    if (m.size() == 0) return 0;
    const Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = tol.rank_rel * sv(0);
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return rank;
}

}  // namespace locc
