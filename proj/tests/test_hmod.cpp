#include "locc/hmod.hpp"
#include "locc/families.hpp"
#include "locc/random.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace locc;

namespace {

ComplexMatrix random_invertible_diagonal(Index d, Rng& rng) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        Complex z = complex_gaussian(rng);
        while (std::abs(z) < 0.2) z = complex_gaussian(rng);
        m(i, i) = z;
    }
    return m;
}

// family of shifted diagonals D_g X^k, pairwise orthogonal under <.,.>_I:
// different shifts never meet the main diagonal, equal shifts get disjoint
// diagonal supports.  Right-multiplying by Q^* moves the context to W = Q.
struct ModuleFamily {
    std::vector<ComplexMatrix> members;
    ComplexMatrix w;
    Index sum_ranks = 0;
};

ModuleFamily random_module_orthogonal_family(Index d, std::uint64_t seed, bool full_rank) {
    Rng rng(derived_seed(seed, 0x4d4f44ULL));
    const ComplexMatrix x = gen_pauli_x(d);
    const ComplexMatrix q = haar_unitary(d, rng);

    ModuleFamily fam;
    fam.w = q;
    ComplexMatrix shift = ComplexMatrix::Identity(d, d);
    for (Index k = 0; k < d; ++k) {
        if (full_rank) {
            fam.members.push_back(random_invertible_diagonal(d, rng) * shift * q.adjoint());
            fam.sum_ranks += d;
        } else {
            // split the diagonal support into up to two random groups
            std::uniform_int_distribution<Index> cut(1, d);
            const Index first = cut(rng);
            ComplexMatrix d1 = ComplexMatrix::Zero(d, d);
            ComplexMatrix d2 = ComplexMatrix::Zero(d, d);
            for (Index i = 0; i < d; ++i) {
                Complex z = complex_gaussian(rng);
                while (std::abs(z) < 0.2) z = complex_gaussian(rng);
                (i < first ? d1 : d2)(i, i) = z;
            }
            fam.members.push_back(d1 * shift * q.adjoint());
            fam.sum_ranks += first;
            if (first < d) {
                fam.members.push_back(d2 * shift * q.adjoint());
                fam.sum_ranks += d - first;
            }
        }
        shift = x * shift;
    }
    return fam;
}

}  // namespace

TEST_SUITE_BEGIN("hmod");

TEST_CASE("module_inner basics") {
    Rng rng(derived_seed(70, 0));
    const Index d = 4;
    const auto ctx = default_module_context(d);

    const ComplexMatrix u = haar_unitary(d, rng);
    CHECK(max_abs(module_inner(u, u, ctx) - ComplexMatrix::Identity(d, d)) <= 1e-12);

    CHECK(max_abs(module_inner(ComplexMatrix::Identity(2, 2), gen_pauli_x(2),
                               default_module_context(2))) < 1e-15);
    CHECK(max_abs(module_inner(gen_pauli_x(3), gen_pauli_z(3), default_module_context(3))) <
          1e-14);

    CHECK_THROWS_AS(module_inner(u, ComplexMatrix::Identity(3, 3), ctx), std::invalid_argument);
}

TEST_CASE("module inner product axioms") {
    for (int t = 0; t < 10; ++t) {
        Rng rng(derived_seed(71, t));
        const Index d = 2 + (t % 7);
        const Index r = d + (t % 3);
        ModuleInnerProductContext ctx{haar_coisometry(d, r, rng), {}};

        const ComplexMatrix x = gaussian_matrix(d, d, rng);
        const ComplexMatrix y = gaussian_matrix(d, d, rng);

        // conjugate symmetry
        CHECK(max_abs(module_inner(x, y, ctx) - module_inner(y, x, ctx).adjoint()) <= 1e-10);

        // right linearity over diagonal multipliers: <XD, Y> = <X, Y> D
        // for the W = I module
        const auto ctx_id = default_module_context(d);
        const ComplexMatrix diag = random_invertible_diagonal(d, rng);
        CHECK(max_abs(module_inner(x * diag, y, ctx_id) - module_inner(x, y, ctx_id) * diag) <=
              1e-9);

        // positivity and definiteness
        const ComplexMatrix gram = module_inner(x, x, ctx);
        for (Index k = 0; k < gram.rows(); ++k) {
            CHECK(std::real(gram(k, k)) >= -1e-12);
            CHECK(std::abs(std::imag(gram(k, k))) <= 1e-12);
        }
        const double colnorm = (x * ctx.w).norm();
        if (max_abs(gram) <= 1e-14) CHECK(colnorm <= 1e-6);
    }
}

TEST_CASE("equivalence_check recovers diagonal rescalings") {
    Rng rng(derived_seed(72, 0));
    const Index d = 4;
    const ComplexMatrix z = gen_pauli_z(d);
    const ComplexMatrix phases = random_diagonal_unitary(d, rng);

    const auto rec = equivalence_check(z * phases, z);
    REQUIRE(rec.has_value());
    CHECK(max_abs(*rec - phases) <= 1e-12);

    CHECK_FALSE(equivalence_check(gen_pauli_x(2), ComplexMatrix::Identity(2, 2)).has_value());

    const auto self = equivalence_check(z, z);
    REQUIRE(self.has_value());
    CHECK(max_abs(*self - ComplexMatrix::Identity(d, d)) <= 1e-12);
}

TEST_CASE("equivalence respects module orthogonality") {
    // <U, X> = <V, X> D when U = V D, so the zero sets coincide
    for (int t = 0; t < 10; ++t) {
        Rng rng(derived_seed(73, t));
        const Index d = 2 + (t % 5);
        const auto ctx = default_module_context(d);
        const ComplexMatrix v = haar_unitary(d, rng);
        const ComplexMatrix diag = random_invertible_diagonal(d, rng);
        const ComplexMatrix u = v * diag;
        const ComplexMatrix x = gaussian_matrix(d, d, rng);

        CHECK(max_abs(module_inner(u, x, ctx) - module_inner(v, x, ctx) * diag) <= 1e-9);

        // an X orthogonal to V stays orthogonal to U
        ComplexMatrix n = gaussian_matrix(d, d, rng);
        n -= delta_map(n);
        const ComplexMatrix ortho = v * n;  // Delta(ortho^* v) = Delta(n^*) = 0
        CHECK(max_abs(module_inner(v, ortho, ctx)) <= 1e-12);
        CHECK(max_abs(module_inner(u, ortho, ctx)) <= 1e-12);
    }
}

TEST_CASE("check_orthogonal_family on shift powers") {
    for (Index d = 2; d <= 8; ++d) {
        StateSet s = make_family("paulis-x", d);
        const auto rep = check_orthogonal_family(s.matrices, default_module_context(d));
        CHECK(rep.orthogonal);
        CHECK(rep.n == d);
        CHECK(rep.bound_satisfied);
        CHECK(rep.expansion_checked);
        CHECK(rep.expansion_size == d * d);
        CHECK(rep.expansion_max_residual <= 1e-10);
    }
}

TEST_CASE("check_orthogonal_family rejects non-orthogonal and non-unitary input") {
    StateSet s;
    s.d = 2;
    s.matrices = {ComplexMatrix::Identity(2, 2), gen_pauli_z(2)};
    const auto rep = check_orthogonal_family(s.matrices, default_module_context(2));
    CHECK_FALSE(rep.orthogonal);
    REQUIRE(rep.failing_pair.has_value());
    CHECK(rep.failing_pair->first == 0);
    CHECK(rep.failing_pair->second == 1);

    CHECK_THROWS_AS(
        check_orthogonal_family({ComplexMatrix(2.0 * ComplexMatrix::Identity(2, 2))},
                                default_module_context(2)),
        std::invalid_argument);
}

TEST_CASE("no d+1 pairwise orthogonal unitaries show up in random attempts") {
    for (Index d = 2; d <= 4; ++d) {
        const auto ctx = default_module_context(d);
        for (int t = 0; t < 50; ++t) {
            Rng rng(derived_seed(74, d * 1000 + t));
            std::vector<ComplexMatrix> family;
            for (Index k = 0; k < d + 1; ++k) family.push_back(haar_unitary(d, rng));
            CHECK_FALSE(check_orthogonal_family(family, ctx).orthogonal);

            // greedy attempt: extend the saturating shift family
            StateSet s = make_family("paulis-x", d);
            std::vector<ComplexMatrix> extended = s.matrices;
            extended.push_back(haar_unitary(d, rng));
            CHECK_FALSE(check_orthogonal_family(extended, ctx).orthogonal);
        }
    }
}

TEST_CASE("genericity_check") {
    ComplexMatrix good(2, 3);
    good << 1.0, 0.0, 1.0 / std::sqrt(2.0), 0.0, 1.0, 1.0 / std::sqrt(2.0);
    CHECK(genericity_check(good));

    ComplexMatrix bad(2, 3);
    bad << 1.0, 0.0, 1.0, 0.0, 1.0, 0.0;
    CHECK_FALSE(genericity_check(bad));

    // rows of a Fourier matrix: Vandermonde with distinct nodes
    const ComplexMatrix w = fourier_matrix(4).topRows(2);
    CHECK(genericity_check(w));

    CHECK_THROWS_AS(genericity_check(ComplexMatrix::Zero(3, 2)), std::invalid_argument);

    // randomized sampling branch for r > 12
    Rng rng(derived_seed(75, 0));
    const ComplexMatrix wide = gaussian_matrix(3, 14, rng);
    CHECK(genericity_check(wide));
    ComplexMatrix wide_bad = wide;
    wide_bad.col(13) = wide_bad.col(12);
    // duplicated columns defeat genericity; the sampler must notice
    bool caught = false;
    for (std::uint64_t s = 0; s < 4 && !caught; ++s) {
        caught = !genericity_check(wide_bad, {}, s);
    }
    CHECK(caught);
}

TEST_CASE("rank_bound_check on unitary families saturates d^2") {
    for (Index d = 2; d <= 5; ++d) {
        const ModuleFamily fam = random_module_orthogonal_family(d, 800 + d, true);
        ModuleInnerProductContext ctx{fam.w, {}};
        const auto rep = rank_bound_check(fam.members, ctx);
        CHECK(rep.preconditions_ok);
        CHECK(rep.bound_holds);
        CHECK(rep.sum_ranks == d * d);
        CHECK(rep.slack == 0);
    }
}

TEST_CASE("rank_bound_check with rank-deficient members") {
    {
        // {|i><0|}: products vanish, any generic W qualifies
        const Index d = 2;
        std::vector<ComplexMatrix> fam;
        for (Index i = 0; i < d; ++i) {
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            m(i, 0) = 1.0;
            fam.push_back(m);
        }
        const auto rep = rank_bound_check(fam, default_module_context(d));
        CHECK(rep.preconditions_ok);
        CHECK(rep.sum_ranks == 2);
        CHECK(rep.bound == 4);
        CHECK(rep.bound_holds);
    }
    for (int t = 0; t < 10; ++t) {
        const Index d = 2 + (t % 4);
        const ModuleFamily fam = random_module_orthogonal_family(d, 900 + t, false);
        ModuleInnerProductContext ctx{fam.w, {}};
        const auto rep = rank_bound_check(fam.members, ctx);
        CHECK(rep.preconditions_ok);
        CHECK(rep.sum_ranks == fam.sum_ranks);
        CHECK(rep.bound_holds);

        // module orthogonality makes {M_k W} HS-orthogonal
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
            for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
                CHECK(std::abs(hs_inner(fam.members[i] * fam.w, fam.members[j] * fam.w)) <=
                      1e-10);
            }
        }
    }
}

TEST_CASE("rank_bound_check reports violated preconditions") {
    StateSet s;
    s.d = 2;
    s.matrices = {ComplexMatrix::Identity(2, 2), gen_pauli_z(2)};
    const auto rep = rank_bound_check(s.matrices, default_module_context(2));
    CHECK_FALSE(rep.orthogonal);
    CHECK_FALSE(rep.preconditions_ok);
}

TEST_SUITE_END();
