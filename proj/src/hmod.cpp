#include "locc/hmod.hpp"

#include "locc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace locc {

ModuleInnerProductContext default_module_context(Index d, const Tolerance& tol) {
    return ModuleInnerProductContext{ComplexMatrix::Identity(d, d), tol};
}

ComplexMatrix module_inner(const ComplexMatrix& x, const ComplexMatrix& y,
                           const ModuleInnerProductContext& ctx) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
        throw std::invalid_argument("module_inner: X, Y must be square and same size");
    }
    if (ctx.w.rows() != x.rows() || ctx.w.cols() < ctx.w.rows()) {
        throw std::invalid_argument("module_inner: W must be d x r with r >= d");
    }
    return delta_map(ctx.w.adjoint() * y.adjoint() * x * ctx.w);
}

std::optional<ComplexMatrix> equivalence_check(const ComplexMatrix& u, const ComplexMatrix& v,
                                               const Tolerance& tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw std::invalid_argument("equivalence_check: matrices must be square, same size");
    }
    const Index d = u.rows();
    const double scale = std::max(comparison_scale(u), comparison_scale(v));
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
        const double denom = v.col(j).squaredNorm();
        if (denom <= tol.zero_abs * tol.zero_abs * scale * scale) {
            // V's column vanishes: U = V D forces U's column to vanish too,
            // and no entry of an invertible D is recoverable from it.
            if (u.col(j).norm() > tol.zero_abs * scale) return std::nullopt;
            diag(j, j) = 1.0;
            continue;
        }
        diag(j, j) = (v.col(j).adjoint() * u.col(j))(0) / denom;
        if (std::abs(diag(j, j)) <= tol.zero_abs) return std::nullopt;  // not invertible
    }
    if (max_abs(u - v * diag) > tol.zero_abs * scale) return std::nullopt;
    return diag;
}

OrthogonalFamilyReport check_orthogonal_family(const std::vector<ComplexMatrix>& us,
                                               const ModuleInnerProductContext& ctx) {
    if (us.empty()) throw std::invalid_argument("check_orthogonal_family: empty family");
    const Index d = us.front().rows();
    const Tolerance& tol = ctx.tol;
    for (const auto& u : us) {
        if (u.rows() != d || u.cols() != d) {
            throw std::invalid_argument("check_orthogonal_family: members must be d x d");
        }
        if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > tol.zero_abs) {
            throw std::invalid_argument("check_orthogonal_family: member is not unitary");
        }
    }

    OrthogonalFamilyReport rep;
    rep.n = static_cast<Index>(us.size());
    rep.d = d;
    rep.orthogonal = true;
    for (std::size_t i = 0; i < us.size(); ++i) {
        for (std::size_t j = i + 1; j < us.size(); ++j) {
            const double r = max_abs(module_inner(us[i], us[j], ctx));
            rep.max_inner_residual = std::max(rep.max_inner_residual, r);
            if (r > tol.zero_abs && rep.orthogonal) {
                rep.orthogonal = false;
                rep.failing_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    rep.bound_satisfied = rep.n <= rep.d;

    const bool w_is_identity =
        ctx.w.rows() == ctx.w.cols() &&
        max_abs(ctx.w - ComplexMatrix::Identity(d, d)) <= tol.zero_abs;
    if (rep.orthogonal && w_is_identity) {
        // Expansion from the size-bound argument: {U_k Z^i} must be
        // pairwise orthogonal in the Hilbert-Schmidt inner product, and
        // there are n*d of them inside a d^2-dimensional space.
        const ComplexMatrix z = gen_pauli_z(d);
        std::vector<ComplexMatrix> expansion;
        ComplexMatrix zpow = ComplexMatrix::Identity(d, d);
        for (Index i = 0; i < d; ++i) {
            for (const auto& u : us) expansion.push_back(u * zpow);
            zpow = zpow * z;
        }
        rep.expansion_checked = true;
        rep.expansion_size = static_cast<Index>(expansion.size());
        for (std::size_t a = 0; a < expansion.size(); ++a) {
            for (std::size_t b = a + 1; b < expansion.size(); ++b) {
                rep.expansion_max_residual = std::max(
                    rep.expansion_max_residual, std::abs(hs_inner(expansion[a], expansion[b])));
            }
        }
    }
    return rep;
}

namespace {

bool subset_full_rank(const ComplexMatrix& w, const std::vector<Index>& cols,
                      const Tolerance& tol) {
    ComplexMatrix sub(w.rows(), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        sub.col(static_cast<Index>(c)) = w.col(cols[c]);
    }
    return numerical_rank(sub, tol) == w.rows();
}

}  // namespace

bool genericity_check(const ComplexMatrix& w, const Tolerance& tol, std::uint64_t seed) {
    const Index d = w.rows();
    const Index r = w.cols();
    if (r < d) throw std::invalid_argument("genericity_check: W must have r >= d columns");

    if (r <= 12) {
        // exhaustive over all d-subsets
        std::vector<Index> pick(static_cast<std::size_t>(d));
        std::iota(pick.begin(), pick.end(), Index{0});
        while (true) {
            if (!subset_full_rank(w, pick, tol)) return false;
            // next combination
            Index i = d - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == r - d + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (Index j = i + 1; j < d; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return true;
    }

    constexpr int kSamples = 200;
    Rng rng(derived_seed(seed, 0x67656e65ULL));
    std::vector<Index> all(static_cast<std::size_t>(r));
    std::iota(all.begin(), all.end(), Index{0});
    for (int s = 0; s < kSamples; ++s) {
        for (std::size_t i = all.size() - 1; i > 0; --i) {
            std::uniform_int_distribution<std::size_t> pickdist(0, i);
            std::swap(all[i], all[pickdist(rng)]);
        }
        std::vector<Index> cols(all.begin(), all.begin() + d);
        if (!subset_full_rank(w, cols, tol)) return false;
    }
    return true;
}

RankBoundReport rank_bound_check(const std::vector<ComplexMatrix>& ms,
                                 const ModuleInnerProductContext& ctx) {
    if (ms.empty()) throw std::invalid_argument("rank_bound_check: empty family");
    const Index d = ms.front().rows();
    const Tolerance& tol = ctx.tol;
    for (const auto& m : ms) {
        if (m.rows() != d || m.cols() != d) {
            throw std::invalid_argument("rank_bound_check: members must be d x d");
        }
    }

    RankBoundReport rep;
    rep.n = static_cast<Index>(ms.size());
    rep.d = d;
    rep.bound = d * d;

    rep.orthogonal = true;
    for (std::size_t i = 0; i < ms.size() && rep.orthogonal; ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const double scale = std::max(comparison_scale(ms[i]), comparison_scale(ms[j]));
            if (max_abs(module_inner(ms[i], ms[j], ctx)) > tol.zero_abs * scale * scale) {
                rep.orthogonal = false;
                break;
            }
        }
    }
    rep.generic = genericity_check(ctx.w, tol);
    rep.preconditions_ok = rep.orthogonal && rep.generic;

    for (const auto& m : ms) {
        rep.ranks.push_back(numerical_rank(m, tol));
        rep.sum_ranks += rep.ranks.back();
    }
    rep.slack = rep.bound - rep.sum_ranks;
    rep.bound_holds = rep.sum_ranks <= rep.bound;
    return rep;
}

}  // namespace locc
