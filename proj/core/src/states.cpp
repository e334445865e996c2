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

#include "mixtura/states.hpp"

#include <cmath>

#include "mixtura/errors.hpp"

namespace mixtura {

Ket::Ket(CVector amps) : amps_(std::move(amps)) {
    if (amps_.size() < 1) {
        throw DimensionMismatch("ket must have dimension >= 1");
    }
    require_finite(amps_, "ket amplitudes");
    double norm = amps_.norm();
    if (std::abs(norm - 1.0) > kNormalizationSlack) {
        throw NotNormalized("ket norm is " + std::to_string(norm));
    }
    amps_ /= norm;
}

Ket Ket::standard_basis(Index dim, Index which) {
    if (which < 0 || which >= dim) {
        throw DimensionMismatch("basis index out of range");
    }
    CVector v = CVector::Zero(dim);
    v(which) = 1.0;
    return Ket(std::move(v));
}

Complex Ket::inner(const Ket &other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatch("inner product of kets of unequal dimension");
    }
    return amps_.dot(other.amps_);
}

DensityOperator::DensityOperator(Matrix m, const Tolerance &tol)
    : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw DimensionMismatch("density operator must be square");
    }
    require_finite(matrix_, "density operator");
    if ((matrix_ - matrix_.adjoint()).norm() > tol.at(matrix_.norm())) {
        throw NotHermitian("density operator is not Hermitian");
    }
    matrix_ = (matrix_ + matrix_.adjoint().eval()) / 2.0;

    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kNormalizationSlack) {
        throw InvariantViolation("density operator trace is " +
                                 std::to_string(tr));
    }
    if (std::abs(tr - 1.0) > 1e-12) {
        renormalized_ = true;
    }
    matrix_ /= tr;

    auto eig = eig_hermitian(matrix_, tol);
    if (eig.values(matrix_.rows() - 1) < -tol.abs) {
        throw InvariantViolation(
            "density operator has negative eigenvalue " +
            std::to_string(eig.values(matrix_.rows() - 1)));
    }
}

Ensemble::Ensemble(std::vector<EnsembleEntry> entries, const Tolerance &tol)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw WeightsNotNormalized("ensemble is empty");
    }
    double sum = 0.0;
    for (const auto &e : entries_) {
        if (!(e.weight > 0.0) || e.weight > 1.0 + kNormalizationSlack) {
            throw WeightsNotNormalized("ensemble weight " +
                                       std::to_string(e.weight) +
                                       " outside (0, 1]");
        }
        if (e.ket.dim() != entries_.front().ket.dim()) {
            throw DimensionMismatch("ensemble kets of unequal dimension");
        }
        sum += e.weight;
    }
    if (std::abs(sum - 1.0) > kNormalizationSlack) {
        throw WeightsNotNormalized("ensemble weights sum to " +
                                   std::to_string(sum));
    }
    (void)tol;
    for (size_t i = 0; i < entries_.size(); ++i) {
        for (size_t j = i + 1; j < entries_.size(); ++j) {
            double overlap = std::abs(entries_[i].ket.inner(entries_[j].ket));
            if (overlap >= kDistinctnessThreshold) {
                throw DuplicateKet("ensemble kets " + std::to_string(i) +
                                   " and " + std::to_string(j) +
                                   " have overlap " + std::to_string(overlap));
            }
        }
    }
}

DensityOperator projector(const Ket &k) {
    return DensityOperator(k.amps() * k.amps().adjoint());
}

DensityOperator convex_mix(const Ensemble &e, const Tolerance &tol) {
    Index d = e.entries().front().ket.dim();
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &entry : e.entries()) {
        sum += entry.weight * (entry.ket.amps() * entry.ket.amps().adjoint());
    }
    return DensityOperator(std::move(sum), tol);
}

Matrix partial_trace_matrix(const Matrix &joint, const BipartiteDims &dims,
                            Keep keep) {
    if (dims.dimA < 1 || dims.dimB < 1 || joint.rows() != dims.joint() ||
        joint.cols() != dims.joint()) {
        throw DimensionMismatch("partial trace dims " +
                                std::to_string(dims.dimA) + "x" +
                                std::to_string(dims.dimB) +
                                " do not factor the joint dimension");
    }
    Index dA = dims.dimA;
    Index dB = dims.dimB;
    if (keep == Keep::A) {
        Matrix out = Matrix::Zero(dA, dA);
        for (Index i = 0; i < dA; ++i) {
            for (Index j = 0; j < dA; ++j) {
                for (Index k = 0; k < dB; ++k) {
                    out(i, j) += joint(i * dB + k, j * dB + k);
                }
            }
        }
        return out;
    }
    Matrix out = Matrix::Zero(dB, dB);
    for (Index k = 0; k < dB; ++k) {
        for (Index l = 0; l < dB; ++l) {
            for (Index i = 0; i < dA; ++i) {
                out(k, l) += joint(i * dB + k, i * dB + l);
            }
        }
    }
    return out;
}

DensityOperator partial_trace(const DensityOperator &rho,
                              const BipartiteDims &dims, Keep keep,
                              const Tolerance &tol) {
    return DensityOperator(partial_trace_matrix(rho.matrix(), dims, keep),
                           tol);
}

double purity(const DensityOperator &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

bool is_pure(const DensityOperator &rho, const Tolerance &tol) {
    const Matrix &m = rho.matrix();
    return (m * m - m).norm() <= tol.abs + tol.rel;
}

bool is_uncorrelated(const DensityOperator &rho, const BipartiteDims &dims,
                     const Tolerance &tol) {
    Matrix a = partial_trace_matrix(rho.matrix(), dims, Keep::A);
    Matrix b = partial_trace_matrix(rho.matrix(), dims, Keep::B);
    return (rho.matrix() - tensor(a, b)).norm() <= tol.abs + tol.rel;
}

} // namespace mixtura
