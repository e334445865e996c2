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

#ifndef MIXTURA_DECOMPOSITIONS_HPP
#define MIXTURA_DECOMPOSITIONS_HPP

#include <vector>

#include "mixtura/states.hpp"

namespace mixtura {

/// psi = sum_s coeffs(s) * left[s] (x) right[s], with both bases orthonormal
/// and coefficients positive descending, sum of squares 1.
struct SchmidtDecomposition {
    RVector coeffs;
    std::vector<Ket> left;
    std::vector<Ket> right;

    Index rank() const {
        return coeffs.size();
    }
};

/// Schmidt decomposition of a bipartite pure state: reshape the amplitude
/// vector to a dimA x dimB coefficient matrix and take its SVD. Singular
/// values at or below `cutoff` are discarded.
SchmidtDecomposition schmidt(const Ket &psi, const BipartiteDims &dims,
                             double cutoff = kDefaultSchmidtCutoff,
                             const Tolerance &tol = {});

struct Purification {
    Ket psi;
    BipartiteDims dims; // dimB == rank(rho): minimal ancilla
};

/// Minimal purification built from the spectral decomposition,
/// psi = sum_j sqrt(w_j) |p_j> (x) |e_j> with standard-basis ancilla kets.
Purification purify(const DensityOperator &rho, const Tolerance &tol = {});

/// Given two joint pure states with equal A-marginals, the unitary U on the
/// B factor with (I (x) U) phi = psi. U is built on the Schmidt support as
/// sum_s |b_s><c_s| and completed over the orthogonal complement.
/// Throws MarginalsDiffer if the marginals do not agree within tolerance.
Matrix lemma_unitary(const Ket &psi, const Ket &phi, const BipartiteDims &dims,
                     const Tolerance &tol = {});

struct SteeringResult {
    std::vector<Ket> ancilla_basis; // orthonormal |c_j> in H_B
    Matrix unitary;                 // U on H_B
    double reconstruction_error;    // ||psi - sum_j sqrt(f_j) phi_j (x) c_j||
};

/// Realizes a convex decomposition of psi's A-marginal by steering: measuring
/// the B side in `ancilla_basis` collapses A into the target's kets with the
/// target's weights.
/// Throws NotADecomposition if the target does not mix to the marginal, and
/// AncillaTooSmall if it has more members than dim H_B.
SteeringResult ghjw_steer(const Ket &psi, const BipartiteDims &dims,
                          const Ensemble &target, const Tolerance &tol = {});

struct AncillaRealization {
    Ket psi;
    BipartiteDims dims;
    std::vector<Ket> ancilla_basis;
    double reconstruction_error;
};

/// Exhibits the ancilla behind a mixture: purifies rho and steers the
/// purification into the given decomposition.
AncillaRealization ancilla_realize(const DensityOperator &rho,
                                   const Ensemble &decomposition,
                                   const Tolerance &tol = {});

} // namespace mixtura

#endif
