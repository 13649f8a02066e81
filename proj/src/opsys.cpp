#include "locc/opsys.hpp"

#include "locc/random.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

namespace {

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    // <a, b>_HS with b conjugated, i.e. Tr(b^* a).
    return (b.adjoint() * a).trace();
}

// Two-pass modified Gram-Schmidt step: returns the component of `cand`
// orthogonal to `basis`.
ComplexMatrix orthogonal_component(ComplexMatrix cand, const std::vector<ComplexMatrix>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            cand -= frobenius_inner(cand, b) * b;
        }
    }
    return cand;
}

}  // namespace

OperatorSystem span_products(const StateSet& s, const Tolerance& tol) {
    s.validate();
    const Index n = s.size();
    const Index d = s.d;

    std::vector<std::pair<int, int>> provenance;
    std::vector<ComplexMatrix> candidates;
    candidates.push_back(ComplexMatrix::Identity(d, d));
    provenance.emplace_back(-1, -1);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            candidates.push_back(s.matrices[static_cast<std::size_t>(j)].adjoint() *
                                 s.matrices[static_cast<std::size_t>(i)]);
            provenance.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }

    OperatorSystem out;
    out.d = d;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double orig = std::sqrt(std::abs(std::real(frobenius_inner(candidates[c], candidates[c]))));
        if (orig == 0.0) continue;
        ComplexMatrix residual = orthogonal_component(candidates[c] / orig, out.basis);
        const double norm = std::sqrt(std::abs(std::real(frobenius_inner(residual, residual))));
        if (norm <= tol.rank_rel) continue;
        out.basis.push_back(residual / norm);
        out.generators.push_back(provenance[c]);
    }
    return out;
}

bool is_multiplicatively_closed(const OperatorSystem& o, const Tolerance& tol) {
    for (const auto& a : o.basis) {
        for (const auto& b : o.basis) {
            const ComplexMatrix prod = a * b;
            const ComplexMatrix residual = orthogonal_component(prod, o.basis);
            const double norm = std::sqrt(std::abs(std::real(frobenius_inner(residual, residual))));
            const double scale = std::max(1.0, std::sqrt(std::abs(
                                              std::real(frobenius_inner(prod, prod)))));
            if (norm > tol.zero_abs * scale) return false;
        }
    }
    return true;
}

bool block_structure_has_separating_vector(const BlockStructure& b) {
    for (const auto& [multiplicity, size] : b.blocks) {
        if (multiplicity < 1 || size < 1) {
            throw std::invalid_argument("block structure entries must be positive");
        }
        if (multiplicity < size) return false;
    }
    return true;
}

SeparatingVectorResult separating_vector_search(const OperatorSystem& o, int trials,
                                                std::uint64_t seed, const Tolerance& tol) {
    SeparatingVectorResult res;
    const Index s = o.dim();
    if (s < 1) throw std::invalid_argument("separating_vector_search: empty system");
    if (s > o.d) {
        // dim(S) <= dim(H) is necessary, so this negative is a theorem.
        res.reason = "dimension-bound";
        return res;
    }
    for (int t = 0; t < trials; ++t) {
        Rng rng(derived_seed(seed, static_cast<std::uint64_t>(t)));
        StateVector v = gaussian_vector(o.d, rng);
        v.normalize();
        ComplexMatrix stacked(o.d, s);
        for (Index b = 0; b < s; ++b) {
            stacked.col(b) = o.basis[static_cast<std::size_t>(b)] * v;
        }
        const Index rank = numerical_rank(stacked, tol);
        res.max_rank_observed = std::max(res.max_rank_observed, rank);
        if (rank == s) {
            res.vector = std::move(v);
            res.reason = "found";
            return res;
        }
    }
    res.reason = "rank-deficient";
    return res;
}

bool theorem_delta_membership(const ComplexMatrix& x, const ComplexMatrix& w,
                              const Tolerance& tol) {
    if (x.rows() != x.cols()) throw std::invalid_argument("theorem_delta_membership: X not square");
    if (w.rows() != x.rows()) throw std::invalid_argument("theorem_delta_membership: shape mismatch");
    const double d = static_cast<double>(x.rows());
    const ComplexMatrix lhs = delta_map(w.adjoint() * x * w);
    const ComplexMatrix rhs = (x.trace() / d) * delta_map(w.adjoint() * w);
    const double scale = std::max(comparison_scale(lhs), comparison_scale(rhs));
    return max_abs(lhs - rhs) <= tol.zero_abs * scale;
}

StateVector delta_separating_vector(const ComplexMatrix& w) {
    if (max_abs(w) == 0.0) throw std::invalid_argument("delta_separating_vector: W is zero");
    const ComplexMatrix gram = w.adjoint() * w;
    const double threshold = 1e-12 * comparison_scale(gram);
    for (Index k = 0; k < gram.rows(); ++k) {
        if (std::real(gram(k, k)) > threshold) return w.col(k);
    }
    throw std::invalid_argument("delta_separating_vector: no positive diagonal entry");
}

UnambiguousResult unambiguous_check(const StateSet& s, int trials, std::uint64_t seed,
                                    const ComplexMatrix* certificate_hint, const Tolerance& tol) {
    s.validate();
    UnambiguousResult res;
    const Index n = s.size();
    if (n > s.d) {
        res.reason = "dimension-bound";
        return res;
    }

    std::vector<StateVector> candidates;
    if (certificate_hint != nullptr) {
        for (Index k = 0; k < certificate_hint->cols(); ++k) {
            StateVector col = certificate_hint->col(k);
            const double norm = col.norm();
            if (norm > tol.zero_abs) candidates.push_back(col / norm);
        }
    }
    for (int t = 0; t < trials; ++t) {
        Rng rng(derived_seed(seed, 0x756e616d62ULL + static_cast<std::uint64_t>(t)));
        StateVector v = gaussian_vector(s.d, rng);
        v.normalize();
        candidates.push_back(std::move(v));
    }

    for (auto& phi : candidates) {
        ComplexMatrix stacked(s.d, n);
        for (Index i = 0; i < n; ++i) {
            stacked.col(i) = s.matrices[static_cast<std::size_t>(i)] * phi;
        }
        const Index rank = numerical_rank(stacked, tol);
        res.max_rank_observed = std::max(res.max_rank_observed, rank);
        if (rank == n) {
            res.vector = std::move(phi);
            res.reason = "found";
            return res;
        }
    }
    res.reason = "rank-deficient";
    return res;
}

}  // namespace locc
