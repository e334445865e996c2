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

#ifndef MIXTURA_SCENARIOS_HPP
#define MIXTURA_SCENARIOS_HPP

#include <string>
#include <utility>
#include <vector>

#include "mixtura/states.hpp"

namespace mixtura {

// Environment kets with pairwise overlap magnitude at or above this are
// treated as collinear.
inline constexpr double kCollinearityThreshold = 1.0 - 1e-9;

/// Preparation that emits system state alpha_s, leaving the relevant
/// environment in eta_s, with amplitude gamma_s.
struct PreparationEntry {
    Complex gamma;
    Ket alpha;
    Ket eta;
};

class PreparationModel {
  public:
    explicit PreparationModel(std::vector<PreparationEntry> entries);

    const std::vector<PreparationEntry> &entries() const {
        return entries_;
    }
    Index system_dim() const {
        return entries_.front().alpha.dim();
    }
    Index environment_dim() const {
        return entries_.front().eta.dim();
    }

  private:
    std::vector<PreparationEntry> entries_;
};

enum class Verdict {
    Pure,
    ImproperMixture,
    PureCompositeContradictsMixedClaim,
};

const char *verdict_name(Verdict v);

/// Everything a scenario run produced: the states it built, the scalar
/// quantities it measured, and the resulting classification.
struct ScenarioReport {
    std::vector<std::pair<std::string, Matrix>> states;
    std::vector<std::pair<std::string, double>> findings;
    Verdict verdict;
};

/// Indistinguishable alternatives: add the weighted vectors and renormalize.
/// Throws ZeroVector on perfect destructive interference.
Ket combine_indistinguishable(const std::vector<Complex> &amplitudes,
                              const std::vector<Ket> &kets,
                              double cutoff = kDefaultSchmidtCutoff);

/// Distinguishable alternatives: add the weighted projectors.
DensityOperator combine_distinguishable(const std::vector<double> &weights,
                                        const std::vector<Ket> &kets,
                                        const Tolerance &tol = {});

/// The composite-reconstruction argument, run both ways: the naive four-state
/// mixture sum_jk a_j b_k |u_j v_k><u_j v_k| against the pure state
/// sum_jk psi_jk |u_j v_k|>. Both share the marginals diag(a), diag(b); only
/// the mixture fails to be pure.
/// Throws DegenerateWeights if a or b has a repeated weight, and
/// MarginalMismatch if psi_coeffs does not reproduce the marginals.
ScenarioReport despagnat_scenario(const std::vector<Ket> &u_basis,
                                  const std::vector<Ket> &v_basis,
                                  const std::vector<double> &a,
                                  const std::vector<double> &b,
                                  const Matrix &psi_coeffs,
                                  const Tolerance &tol = {});

/// The canonical Schmidt-diagonal coefficient choice psi_jk = delta_jk
/// sqrt(a_j), valid when a == b.
Matrix schmidt_diagonal_coefficients(const std::vector<double> &a);

/// Classifies what a randomly varying preparation actually produces:
/// collinear environments leave the system pure; non-collinear ones leave it
/// an improper mixture obtained by tracing out the environment.
ScenarioReport prepare_with_environment(const PreparationModel &model,
                                        const Tolerance &tol = {});

/// Premeasurement: entangle system amplitudes with orthonormal pointer
/// states, trace out the apparatus, and compare against the mixture of
/// distinguishable alternatives.
ScenarioReport premeasurement(const std::vector<Complex> &system_amps,
                              const std::vector<Ket> &pointer_basis,
                              const Tolerance &tol = {});

} // namespace mixtura

#endif
