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

#include "mixtura/errors.hpp"
#include "mixtura/numerics.hpp"
#include "mixtura/random_states.hpp"

using namespace mixtura;

namespace {

Matrix make2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

// Small-integer matrices: all products stay exact in double precision.
Matrix random_int_matrix(StateSampler &sampler, Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            m(i, j) = Complex(static_cast<double>(sampler.index(-4, 4)),
                              static_cast<double>(sampler.index(-4, 4)));
        }
    }
    return m;
}

} // namespace

TEST_CASE("dagger conjugates and transposes") {
    Matrix scalar(1, 1);
    scalar << Complex(2, 3);
    CHECK(dagger(scalar)(0, 0) == Complex(2, -3));

    Matrix eye = Matrix::Identity(3, 3);
    CHECK(dagger(eye) == eye);

    Matrix upper = make2(0, 1, 0, 0);
    CHECK(dagger(upper) == make2(0, 0, 1, 0));

    StateSampler sampler(1);
    Matrix m = random_int_matrix(sampler, 3, 5);
    CHECK(dagger(dagger(m)) == m);
}

TEST_CASE("tensor product structure") {
    Matrix ket0(2, 1), ket1(2, 1);
    ket0 << 1, 0;
    ket1 << 0, 1;
    Matrix joint = tensor(ket0, ket1);
    REQUIRE(joint.rows() == 4);
    CHECK(joint(0, 0) == Complex(0));
    CHECK(joint(1, 0) == Complex(1));
    CHECK(joint(2, 0) == Complex(0));
    CHECK(joint(3, 0) == Complex(0));

    CHECK(tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) ==
          Matrix::Identity(4, 4));

    Matrix x = make2(0, 1, 1, 0);
    Matrix z = make2(1, 0, 0, -1);
    Matrix xz = tensor(x, z);
    Matrix expected(4, 4);
    expected << 0, 0, 1, 0, //
        0, 0, 0, -1,        //
        1, 0, 0, 0,         //
        0, -1, 0, 0;
    CHECK(xz == expected);
}

TEST_CASE("tensor is associative and multiplicative on traces") {
    StateSampler sampler(2);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_int_matrix(sampler, 2, 2);
        Matrix b = random_int_matrix(sampler, 3, 3);
        Matrix c = random_int_matrix(sampler, 2, 2);
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) <=
              1e-12 * std::max(1.0, std::abs(a.trace() * b.trace())));
    }
}

TEST_CASE("eig_hermitian on small frozen cases") {
    auto eye = eig_hermitian(Matrix::Identity(2, 2));
    CHECK(eye.values(0) == doctest::Approx(1.0));
    CHECK(eye.values(1) == doctest::Approx(1.0));
    CHECK((eye.vectors.adjoint() * eye.vectors - Matrix::Identity(2, 2))
              .norm() < 1e-12);

    Matrix diag = make2(0.4, 0, 0, 0.6);
    auto d = eig_hermitian(diag);
    CHECK(d.values(0) == doctest::Approx(0.6));
    CHECK(d.values(1) == doctest::Approx(0.4));
    CHECK(std::abs(d.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(d.vectors(0, 1)) == doctest::Approx(1.0));

    // Hand oracle: characteristic polynomial of [[0,1],[1,0]] gives +-1 with
    // eigenvectors (1,1)/sqrt(2) and (1,-1)/sqrt(2).
    auto x = eig_hermitian(make2(0, 1, 1, 0));
    CHECK(x.values(0) == doctest::Approx(1.0));
    CHECK(x.values(1) == doctest::Approx(-1.0));
    double isq = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(x.vectors(0, 0) - isq) < 1e-12);
    CHECK(std::abs(x.vectors(1, 0) - isq) < 1e-12);
    CHECK(std::abs(x.vectors(0, 1) - isq) < 1e-12);
    CHECK(std::abs(x.vectors(1, 1) + isq) < 1e-12);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    CHECK_THROWS_AS((void)eig_hermitian(make2(0, 1, 0, 0)), NotHermitian);
}

TEST_CASE("eig_hermitian reconstruction property") {
    StateSampler sampler(3);
    for (int t = 0; t < 50; ++t) {
        Index n = sampler.index(2, 8);
        Matrix m = sampler.hermitian(n);
        auto eig = eig_hermitian(m);
        Matrix rebuilt = eig.vectors * eig.values.asDiagonal() *
                         eig.vectors.adjoint();
        CHECK((rebuilt - m).norm() <= 1e-10 * m.norm());
        CHECK((eig.vectors.adjoint() * eig.vectors -
               Matrix::Identity(n, n))
                  .norm() <= 1e-10);
        for (Index j = 1; j < n; ++j) {
            CHECK(eig.values(j) <= eig.values(j - 1));
        }
    }
}

TEST_CASE("eig_hermitian is deterministic under degeneracy") {
    Matrix m = tensor(make2(0, 1, 1, 0), Matrix::Identity(2, 2));
    auto first = eig_hermitian(m);
    auto second = eig_hermitian(m);
    CHECK(first.vectors == second.vectors);
}

TEST_CASE("svd frozen cases") {
    Matrix diag = make2(3, 0, 0, 2);
    auto d = svd(diag);
    CHECK(d.singulars(0) == doctest::Approx(3.0));
    CHECK(d.singulars(1) == doctest::Approx(2.0));

    auto zero = svd(Matrix::Zero(3, 2));
    CHECK(zero.singulars.maxCoeff() == doctest::Approx(0.0));

    // m * dagger(m) has eigenvalues 1 and 0.
    Matrix rank1 = make2(1, 1, 0, 0) / std::sqrt(2.0);
    auto r = svd(rank1);
    CHECK(r.singulars(0) == doctest::Approx(1.0));
    CHECK(r.singulars(1) == doctest::Approx(0.0));
}

TEST_CASE("svd reconstruction property") {
    StateSampler sampler(4);
    for (int t = 0; t < 50; ++t) {
        Index rows = sampler.index(1, 8);
        Index cols = sampler.index(1, 8);
        Matrix m(rows, cols);
        for (Index i = 0; i < rows; ++i) {
            for (Index j = 0; j < cols; ++j) {
                m(i, j) = sampler.gaussian();
            }
        }
        auto s = svd(m);
        Matrix rebuilt =
            s.left * s.singulars.asDiagonal() * s.right.adjoint();
        CHECK((rebuilt - m).norm() <= 1e-10 * std::max(1.0, m.norm()));
        for (Index j = 1; j < s.singulars.size(); ++j) {
            CHECK(s.singulars(j) <= s.singulars(j - 1));
        }
        CHECK(s.singulars.minCoeff() >= 0.0);
    }
}

TEST_CASE("fix_phase makes the leading significant component real positive") {
    CVector v(3);
    v << Complex(0, 0), Complex(0, -2), Complex(1, 1);
    CVector fixed = fix_phase(v);
    CHECK(fixed(1).real() == doctest::Approx(2.0));
    CHECK(std::abs(fixed(1).imag()) < 1e-15);
    CHECK(fixed.norm() == doctest::Approx(v.norm()));
}

TEST_CASE("complete_basis extends to a unitary") {
    CVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    Matrix basis = complete_basis({plus}, 2);
    CHECK((basis.adjoint() * basis - Matrix::Identity(2, 2)).norm() < 1e-12);
    CHECK((basis.col(0) - plus).norm() < 1e-12);
}
