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

#ifndef MIXTURA_STATES_HPP
#define MIXTURA_STATES_HPP

#include <vector>

#include "mixtura/numerics.hpp"

namespace mixtura {

// Kets at most this far from unit norm are renormalized on construction;
// anything further off is rejected. Same policy applies to density-operator
// traces (file-sourced data tolerance).
inline constexpr double kNormalizationSlack = 1e-8;

// Two kets with |<a|b>| at or above this are considered the same ray when
// validating ensemble distinctness.
inline constexpr double kDistinctnessThreshold = 1.0 - 1e-8;

/// Normalized pure state.
class Ket {
  public:
    explicit Ket(CVector amps);

    static Ket standard_basis(Index dim, Index which);

    Index dim() const {
        return amps_.size();
    }
    const CVector &amps() const {
        return amps_;
    }

    /// <this|other>.
    Complex inner(const Ket &other) const;

    /// Ray distance (global-phase invariant).
    double distance(const Ket &other) const {
        return phase_invariant_distance(amps_, other.amps_);
    }

  private:
    CVector amps_;
};

/// Hermitian, positive-semidefinite, unit-trace operator.
class DensityOperator {
  public:
    DensityOperator(Matrix m, const Tolerance &tol = {});

    Index dim() const {
        return matrix_.rows();
    }
    const Matrix &matrix() const {
        return matrix_;
    }

    /// True if the input trace was off by more than round-off (but within the
    /// slack) and got rescaled.
    bool was_renormalized() const {
        return renormalized_;
    }

  private:
    Matrix matrix_;
    bool renormalized_ = false;
};

struct EnsembleEntry {
    double weight;
    Ket ket;
};

/// Weighted list of pairwise-distinct pure states.
class Ensemble {
  public:
    explicit Ensemble(std::vector<EnsembleEntry> entries,
                      const Tolerance &tol = {});

    const std::vector<EnsembleEntry> &entries() const {
        return entries_;
    }
    size_t size() const {
        return entries_.size();
    }

  private:
    std::vector<EnsembleEntry> entries_;
};

/// Factorization of a joint index space; joint index = i * dimB + k.
struct BipartiteDims {
    Index dimA;
    Index dimB;

    Index joint() const {
        return dimA * dimB;
    }
};

enum class Keep { A, B };

/// |k><k|.
DensityOperator projector(const Ket &k);

/// rho = sum_s w_s |phi_s><phi_s|.
DensityOperator convex_mix(const Ensemble &e, const Tolerance &tol = {});

/// Trace over the discarded factor. keep == Keep::A contracts the B index.
DensityOperator partial_trace(const DensityOperator &rho,
                              const BipartiteDims &dims, Keep keep,
                              const Tolerance &tol = {});

/// Raw-matrix partial trace; no density-operator validation on either side.
Matrix partial_trace_matrix(const Matrix &joint, const BipartiteDims &dims,
                            Keep keep);

/// Tr(rho^2), in [1/dim, 1].
double purity(const DensityOperator &rho);

/// rho is a projector: ||rho^2 - rho||_F within tolerance.
bool is_pure(const DensityOperator &rho, const Tolerance &tol = {});

/// rho equals the tensor product of its own marginals.
bool is_uncorrelated(const DensityOperator &rho, const BipartiteDims &dims,
                     const Tolerance &tol = {});

} // namespace mixtura

#endif
