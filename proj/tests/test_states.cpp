// Copyright 2026 The Mixtura Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "mixtura/decompositions.hpp"
#include "mixtura/errors.hpp"
#include "mixtura/random_states.hpp"
#include "mixtura/states.hpp"

using namespace mixtura;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Ket plus_ket() {
    CVector v(2);
    v << kInvSqrt2, kInvSqrt2;
    return Ket(v);
}

Ket bell_phi_plus() {
    CVector v = CVector::Zero(4);
    v(0) = kInvSqrt2;
    v(3) = kInvSqrt2;
    return Ket(v);
}

Ensemble random_ensemble(StateSampler &sampler) {
    for (;;) {
        Index count = sampler.index(2, 6);
        Index dim = sampler.index(2, 6);
        std::vector<double> w = sampler.weights(count);
        std::vector<EnsembleEntry> entries;
        for (Index s = 0; s < count; ++s) {
            entries.push_back(
                {w[static_cast<size_t>(s)], sampler.ket(dim)});
        }
        try {
            return Ensemble(std::move(entries));
        } catch (const DuplicateKet &) {
        } catch (const WeightsNotNormalized &) {
        }
    }
}

} // namespace

TEST_CASE("ket validation") {
    CVector bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(Ket{bad}, NotNormalized);

    CVector slightly_off(2);
    slightly_off << 1.0 + 5e-9, 0.0;
    Ket renorm(slightly_off);
    CHECK(renorm.amps().norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("projector frozen cases") {
    auto p0 = projector(Ket::standard_basis(2, 0));
    CHECK(p0.matrix()(0, 0) == Complex(1));
    CHECK(p0.matrix()(1, 1) == Complex(0));

    auto pplus = projector(plus_ket());
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) {
            CHECK(pplus.matrix()(i, j).real() == doctest::Approx(0.5));
        }
    }

    // Global phase drops out of the outer product.
    CVector phased(2);
    phased << Complex(0, 1), 0;
    auto pi = projector(Ket(phased));
    CHECK(pi.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(pi.matrix()(0, 1)) < 1e-15);
}

TEST_CASE("convex_mix frozen cases") {
    Ensemble single({{1.0, Ket::standard_basis(2, 0)}});
    CHECK(convex_mix(single).matrix()(0, 0).real() == doctest::Approx(1.0));

    Ensemble uniform({{0.5, Ket::standard_basis(2, 0)},
                      {0.5, Ket::standard_basis(2, 1)}});
    CHECK((convex_mix(uniform).matrix() -
           Matrix::Identity(2, 2) * 0.5)
              .norm() < 1e-14);

    // Hand oracle: 0.5 diag(1,0) + 0.5 * (all 0.5) = [[0.75,0.25],[0.25,0.25]].
    Ensemble skew({{0.5, Ket::standard_basis(2, 0)}, {0.5, plus_ket()}});
    Matrix rho = convex_mix(skew).matrix();
    CHECK(rho(0, 0).real() == doctest::Approx(0.75));
    CHECK(rho(0, 1).real() == doctest::Approx(0.25));
    CHECK(rho(1, 0).real() == doctest::Approx(0.25));
    CHECK(rho(1, 1).real() == doctest::Approx(0.25));
}

TEST_CASE("ensemble validation errors") {
    CHECK_THROWS_AS(Ensemble({{0.5, Ket::standard_basis(2, 0)},
                              {0.2, Ket::standard_basis(2, 1)}}),
                    WeightsNotNormalized);
    CHECK_THROWS_AS(Ensemble({{0.5, Ket::standard_basis(2, 0)},
                              {0.5, Ket::standard_basis(2, 0)}}),
                    DuplicateKet);
}

TEST_CASE("partial_trace frozen cases") {
    auto bell_marginal =
        partial_trace(projector(bell_phi_plus()), {2, 2}, Keep::A);
    CHECK((bell_marginal.matrix() - Matrix::Identity(2, 2) * 0.5).norm() <
          1e-12);

    // Product state reduces to its factor.
    Ket product(tensor(Ket::standard_basis(2, 0).amps(), plus_ket().amps()));
    auto left = partial_trace(projector(product), {2, 2}, Keep::A);
    CHECK(left.matrix()(0, 0).real() == doctest::Approx(1.0));
    auto right = partial_trace(projector(product), {2, 2}, Keep::B);
    CHECK(right.matrix()(0, 1).real() == doctest::Approx(0.5));

    // Direct index-sum oracle over the 4x4: diag(0.6, 0.4).
    CVector entangled = CVector::Zero(4);
    entangled(0) = std::sqrt(0.6);
    entangled(3) = std::sqrt(0.4);
    auto marg = partial_trace(projector(Ket(entangled)), {2, 2}, Keep::A);
    CHECK(marg.matrix()(0, 0).real() == doctest::Approx(0.6));
    CHECK(marg.matrix()(1, 1).real() == doctest::Approx(0.4));
    CHECK(std::abs(marg.matrix()(0, 1)) < 1e-12);

    CHECK_THROWS_AS(
        (void)partial_trace(projector(bell_phi_plus()), {3, 2}, Keep::A),
        DimensionMismatch);
}

TEST_CASE("purity frozen cases") {
    CHECK(purity(projector(plus_ket())) == doctest::Approx(1.0));

    DensityOperator maximally_mixed(Matrix::Identity(2, 2) * 0.5);
    CHECK(purity(maximally_mixed) == doctest::Approx(0.5));

    Matrix d(2, 2);
    d << 0.6, 0, 0, 0.4;
    CHECK(purity(DensityOperator(d)) == doctest::Approx(0.52));
}

TEST_CASE("is_pure boundary behavior") {
    CHECK(is_pure(projector(plus_ket())));
    CHECK_FALSE(is_pure(DensityOperator(Matrix::Identity(2, 2) * 0.5)));

    Matrix nearly(2, 2);
    nearly << 1.0 - 1e-12, 0, 0, 1e-12;
    CHECK(is_pure(DensityOperator(nearly)));
}

TEST_CASE("is_uncorrelated frozen cases") {
    Matrix a(2, 2);
    a << 0.6, 0, 0, 0.4;
    DensityOperator product(tensor(a, Matrix::Identity(2, 2) * 0.5));
    CHECK(is_uncorrelated(product, {2, 2}));

    CHECK_FALSE(is_uncorrelated(projector(bell_phi_plus()), {2, 2}));

    // The naive product-of-marginals mixture over orthonormal u, v factors.
    std::vector<double> a_w{0.6, 0.4};
    std::vector<double> b_w{0.7, 0.3};
    Matrix naive = Matrix::Zero(4, 4);
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            CVector uv = tensor(Ket::standard_basis(2, j).amps(),
                                Ket::standard_basis(2, k).amps());
            naive += a_w[j] * b_w[k] * (uv * uv.adjoint());
        }
    }
    CHECK(is_uncorrelated(DensityOperator(naive), {2, 2}));
}

TEST_CASE("density operator renormalization flag") {
    Matrix m = Matrix::Identity(2, 2) * (0.5 + 2.5e-9);
    DensityOperator rho(m);
    CHECK(rho.was_renormalized());
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));

    Matrix way_off = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator{way_off}, InvariantViolation);
}

TEST_CASE("convex_mix invariants on random ensembles") {
    StateSampler sampler(11);
    for (int t = 0; t < 40; ++t) {
        Ensemble e = random_ensemble(sampler);
        DensityOperator rho = convex_mix(e);
        CHECK((rho.matrix() - rho.matrix().adjoint()).norm() < 1e-10);
        CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
        auto eig = eig_hermitian(rho.matrix());
        CHECK(eig.values.minCoeff() >= -1e-10);

        // purity agrees with the spectral route.
        double from_spectrum = 0.0;
        for (Index j = 0; j < eig.values.size(); ++j) {
            from_spectrum += eig.values(j) * eig.values(j);
        }
        CHECK(std::abs(purity(rho) - from_spectrum) < 1e-10);
    }
}

TEST_CASE("partial_trace linearity and product marginals") {
    StateSampler sampler(12);
    for (int t = 0; t < 25; ++t) {
        BipartiteDims dims{sampler.index(2, 3), sampler.index(2, 3)};
        DensityOperator r1 = sampler.density(dims.joint(), dims.joint());
        DensityOperator r2 = sampler.density(dims.joint(), dims.joint());
        double alpha = sampler.uniform(0.1, 0.9);
        Matrix mixed = alpha * r1.matrix() + (1 - alpha) * r2.matrix();
        Matrix lhs = partial_trace_matrix(mixed, dims, Keep::A);
        Matrix rhs =
            alpha * partial_trace_matrix(r1.matrix(), dims, Keep::A) +
            (1 - alpha) * partial_trace_matrix(r2.matrix(), dims, Keep::A);
        CHECK((lhs - rhs).norm() < 1e-10);

        DensityOperator a = sampler.density(dims.dimA, dims.dimA);
        DensityOperator b = sampler.density(dims.dimB, dims.dimB);
        DensityOperator joint(tensor(a.matrix(), b.matrix()));
        CHECK((partial_trace(joint, dims, Keep::A).matrix() - a.matrix())
                  .norm() < 1e-10);
    }
}

TEST_CASE("marginal purity matches Schmidt rank") {
    StateSampler sampler(13);
    for (int t = 0; t < 25; ++t) {
        BipartiteDims dims{sampler.index(2, 4), sampler.index(2, 4)};
        Ket psi = sampler.ket(dims.joint());
        auto sd = schmidt(psi, dims, 1e-6);
        bool marginal_pure =
            is_pure(partial_trace(projector(psi), dims, Keep::A));
        CHECK(marginal_pure == (sd.rank() < 2));

        // A genuinely product state must come out pure.
        Ket product(
            tensor(sampler.ket(dims.dimA).amps(), sampler.ket(dims.dimB).amps()));
        CHECK(is_pure(partial_trace(projector(product), dims, Keep::A)));
    }
}
