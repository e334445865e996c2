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

#include "mixtura/random_states.hpp"

#include <cmath>

namespace mixtura {

double StateSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Index StateSampler::index(Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng_);
}

Complex StateSampler::gaussian() {
    double re = normal_(rng_);
    double im = normal_(rng_);
    return Complex(re, im);
}

CVector StateSampler::ket_vector(Index dim) {
    CVector v(dim);
    for (Index i = 0; i < dim; ++i) {
        v(i) = gaussian();
    }
    return v / v.norm();
}

Ket StateSampler::ket(Index dim) {
    return Ket(ket_vector(dim));
}

Matrix StateSampler::unitary(Index dim) {
    Matrix g(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            g(i, j) = gaussian();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

Matrix StateSampler::hermitian(Index dim) {
    Matrix g(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            g(i, j) = gaussian();
        }
    }
    return (g + g.adjoint()) / 2.0;
}

DensityOperator StateSampler::density(Index dim, Index rank) {
    Matrix g(dim, rank);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < rank; ++j) {
            g(i, j) = gaussian();
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(std::move(rho));
}

std::vector<double> StateSampler::weights(Index count, double floor) {
    std::vector<double> w(static_cast<size_t>(count));
    while (true) {
        double sum = 0.0;
        for (auto &x : w) {
            x = -std::log(uniform(1e-12, 1.0)); // flat Dirichlet
            sum += x;
        }
        bool ok = true;
        for (auto &x : w) {
            x /= sum;
            ok = ok && x >= floor;
        }
        if (ok) {
            return w;
        }
    }
}

} // namespace mixtura
