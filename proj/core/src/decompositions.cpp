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

#include "mixtura/decompositions.hpp"

#include <cmath>

#include "mixtura/errors.hpp"

namespace mixtura {

namespace {

Matrix reshape_to_coefficients(const Ket &psi, const BipartiteDims &dims) {
    if (psi.dim() != dims.joint()) {
        throw DimensionMismatch("ket dimension " + std::to_string(psi.dim()) +
                                " does not equal dimA*dimB");
    }
    Matrix coeff(dims.dimA, dims.dimB);
    for (Index i = 0; i < dims.dimA; ++i) {
        for (Index k = 0; k < dims.dimB; ++k) {
            coeff(i, k) = psi.amps()(i * dims.dimB + k);
        }
    }
    return coeff;
}

Matrix marginal_a(const Ket &psi, const BipartiteDims &dims) {
    Matrix c = reshape_to_coefficients(psi, dims);
    return c * c.adjoint();
}

} // namespace

SchmidtDecomposition schmidt(const Ket &psi, const BipartiteDims &dims,
                             double cutoff, const Tolerance &tol) {
    Matrix coeff = reshape_to_coefficients(psi, dims);
    SvdResult decomposed = svd(coeff, tol);

    Index rank = 0;
    while (rank < decomposed.singulars.size() &&
           decomposed.singulars(rank) > cutoff) {
        ++rank;
    }

    SchmidtDecomposition out;
    out.coeffs = decomposed.singulars.head(rank);
    double mass = out.coeffs.squaredNorm();
    if (mass <= 0.0) {
        throw ZeroVector("all Schmidt coefficients below cutoff");
    }
    out.coeffs /= std::sqrt(mass);
    for (Index s = 0; s < rank; ++s) {
        out.left.emplace_back(decomposed.left.col(s));
        // psi = sum_s sigma_s u_s (x) conj(v_s).
        out.right.emplace_back(decomposed.right.col(s).conjugate());
    }
    return out;
}

Purification purify(const DensityOperator &rho, const Tolerance &tol) {
    auto eig = eig_hermitian(rho.matrix(), tol);
    Index rank = 0;
    while (rank < eig.values.size() && eig.values(rank) > tol.abs) {
        ++rank;
    }
    if (rank == 0) {
        throw InvariantViolation("density operator has no spectral mass");
    }

    Index d = rho.dim();
    CVector psi = CVector::Zero(d * rank);
    for (Index j = 0; j < rank; ++j) {
        double w = eig.values(j);
        for (Index i = 0; i < d; ++i) {
            psi(i * rank + j) = std::sqrt(w) * eig.vectors(i, j);
        }
    }
    return Purification{Ket(std::move(psi)), BipartiteDims{d, rank}};
}

Matrix lemma_unitary(const Ket &psi, const Ket &phi, const BipartiteDims &dims,
                     const Tolerance &tol) {
    Matrix rho_psi = marginal_a(psi, dims);
    Matrix rho_phi = marginal_a(phi, dims);
    double mismatch = (rho_psi - rho_phi).norm();
    if (mismatch > tol.at(rho_psi.norm())) {
        throw MarginalsDiffer("A-marginals differ by " +
                              std::to_string(mismatch));
    }

    auto eig = eig_hermitian((rho_psi + rho_phi) / 2.0, tol);
    Matrix coeff_psi = reshape_to_coefficients(psi, dims);
    Matrix coeff_phi = reshape_to_coefficients(phi, dims);

    // beta_j = (<p_j| (x) I) psi, a row of P^dagger * C; with weight w_j its
    // normalization gives the orthonormal b_j of the constructive proof.
    std::vector<CVector> b_set;
    std::vector<CVector> c_set;
    for (Index j = 0; j < eig.values.size(); ++j) {
        double w = eig.values(j);
        if (w <= std::max(tol.abs, kDefaultSchmidtCutoff)) {
            break;
        }
        CVector p = eig.vectors.col(j);
        b_set.push_back((p.adjoint() * coeff_psi).transpose() / std::sqrt(w));
        c_set.push_back((p.adjoint() * coeff_phi).transpose() / std::sqrt(w));
    }

    Matrix b_full = complete_basis(b_set, dims.dimB, tol.abs);
    Matrix c_full = complete_basis(c_set, dims.dimB, tol.abs);
    return b_full * c_full.adjoint();
}

SteeringResult ghjw_steer(const Ket &psi, const BipartiteDims &dims,
                          const Ensemble &target, const Tolerance &tol) {
    Index m = static_cast<Index>(target.size());
    if (m > dims.dimB) {
        throw AncillaTooSmall("decomposition has " + std::to_string(m) +
                              " members but dim H_B is " +
                              std::to_string(dims.dimB));
    }
    if (target.entries().front().ket.dim() != dims.dimA) {
        throw DimensionMismatch("target kets do not live on H_A");
    }

    Matrix rho_a = marginal_a(psi, dims);
    Matrix mixed = convex_mix(target, tol).matrix();
    double mismatch = (mixed - rho_a).norm();
    if (mismatch > tol.at(rho_a.norm())) {
        throw NotADecomposition("target mixes to an operator at distance " +
                                std::to_string(mismatch) +
                                " from the marginal");
    }

    // Psi' = sum_j sqrt(f_j) phi_j (x) |d_j>, d_j the standard basis.
    CVector prime = CVector::Zero(dims.joint());
    for (Index j = 0; j < m; ++j) {
        const auto &entry = target.entries()[static_cast<size_t>(j)];
        double amp = std::sqrt(entry.weight);
        for (Index i = 0; i < dims.dimA; ++i) {
            prime(i * dims.dimB + j) += amp * entry.ket.amps()(i);
        }
    }

    SteeringResult out;
    out.unitary = lemma_unitary(psi, Ket(prime), dims, tol);

    CVector reconstructed = CVector::Zero(dims.joint());
    for (Index j = 0; j < m; ++j) {
        const auto &entry = target.entries()[static_cast<size_t>(j)];
        CVector c = out.unitary.col(j);
        out.ancilla_basis.emplace_back(c);
        double amp = std::sqrt(entry.weight);
        for (Index i = 0; i < dims.dimA; ++i) {
            for (Index k = 0; k < dims.dimB; ++k) {
                reconstructed(i * dims.dimB + k) +=
                    amp * entry.ket.amps()(i) * c(k);
            }
        }
    }
    out.reconstruction_error = (psi.amps() - reconstructed).norm();
    return out;
}

AncillaRealization ancilla_realize(const DensityOperator &rho,
                                   const Ensemble &decomposition,
                                   const Tolerance &tol) {
    Matrix mixed = convex_mix(decomposition, tol).matrix();
    double mismatch = (mixed - rho.matrix()).norm();
    if (mismatch > tol.at(rho.matrix().norm())) {
        throw NotADecomposition("ensemble mixes to an operator at distance " +
                                std::to_string(mismatch) + " from rho");
    }

    Purification pure = purify(rho, tol);
    SteeringResult steered = ghjw_steer(pure.psi, pure.dims, decomposition, tol);
    return AncillaRealization{pure.psi, pure.dims,
                              std::move(steered.ancilla_basis),
                              steered.reconstruction_error};
}

} // namespace mixtura
