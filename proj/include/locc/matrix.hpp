// Core complex-matrix primitives: the diagonal-projection map, column
// stacking, Fourier and generalized Pauli matrices, Hilbert-Schmidt inner
// product, co-isometry and rank tests.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>

namespace locc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Comparison thresholds used throughout.  `zero_abs` is an absolute
/// max-entry threshold, scaled by max(1, input magnitude) at use sites;
/// `rank_rel` is relative to the largest singular value.
struct Tolerance {
    double zero_abs = 1e-9;
    double rank_rel = 1e-12;
};

/// Largest entry modulus, 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

/// max(1, |m|_max): the scale factor for absolute comparisons.
template <typename Derived>
double comparison_scale(const Eigen::MatrixBase<Derived>& m) {
    return std::max(1.0, max_abs(m));
}

/// Keeps the diagonal of a square matrix, zeroes everything else.
/// Linear, idempotent and trace-preserving.
ComplexMatrix delta_map(const ComplexMatrix& m);

/// Stacks the columns of `a` top to bottom.  Satisfies
/// (C (x) A) vec(B) = vec(A B C^T) whenever shapes permit.
StateVector vec_op(const ComplexMatrix& a);

/// d x d unitary Fourier matrix, F[j,k] = w^{jk}/sqrt(d) with w = e^{2 pi i/d}.
ComplexMatrix fourier_matrix(Index d);

/// Cyclic shift X|k> = |k+1 mod d>.
ComplexMatrix gen_pauli_x(Index d);

/// Clock matrix Z = diag(1, w, w^2, ..., w^{d-1}).
ComplexMatrix gen_pauli_z(Index d);

/// Hilbert-Schmidt inner product Tr(b^* a).  Shapes must match.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff W W^* = I within tol for a d x r matrix W with r >= d.
/// r < d is a structural error and throws.
bool is_coisometry(const ComplexMatrix& w, const Tolerance& tol = {});

/// max-entry distance of W W^* from the identity.
double coisometry_defect(const ComplexMatrix& w);

/// Number of singular values above rank_rel * sigma_max; 0 for zero input.
Index numerical_rank(const ComplexMatrix& m, const Tolerance& tol = {});

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

}  // namespace locc
