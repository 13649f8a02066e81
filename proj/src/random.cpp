#include "locc/random.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace locc {

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Complex complex_gaussian(Rng& rng) {
    // Box-Muller on explicit uniforms keeps draws identical across library
    // implementations.
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double u1 = uni(rng);
    while (u1 <= 1e-300) u1 = uni(rng);
    const double u2 = uni(rng);
    const double radius = std::sqrt(-std::log(u1));  // variance 1/2 per component
    const double angle = 2.0 * std::numbers::pi * u2;
    return Complex{radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) m(r, c) = complex_gaussian(rng);
    }
    return m;
}

StateVector gaussian_vector(Index d, Rng& rng) {
    StateVector v(d);
    for (Index i = 0; i < d; ++i) v(i) = complex_gaussian(rng);
    return v;
}

ComplexMatrix haar_unitary(Index d, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= (mag > 0.0) ? rii / mag : Complex{1.0, 0.0};
    }
    return q;
}

ComplexMatrix haar_coisometry(Index d, Index r, Rng& rng) {
    // Rows of a Haar r x r unitary restricted to the first d coordinates.
    Rng local(rng());
    const ComplexMatrix u = haar_unitary(r, local);
    return u.topRows(d);
}

ComplexMatrix random_cycle_permutation(Index d, Rng& rng) {
    std::vector<Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(order[i], order[pick(rng)]);
    }
    // order[0] -> order[1] -> ... -> order[d-1] -> order[0], one d-cycle.
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
        const Index from = order[static_cast<std::size_t>(k)];
        const Index to = order[static_cast<std::size_t>((k + 1) % d)];
        p(to, from) = 1.0;
    }
    return p;
}

ComplexMatrix random_diagonal_unitary(Index d, Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        const double a = uni(rng);
        m(i, i) = Complex{std::cos(a), std::sin(a)};
    }
    return m;
}

}  // namespace locc
