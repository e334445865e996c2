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

#ifndef MIXTURA_RANDOM_STATES_HPP
#define MIXTURA_RANDOM_STATES_HPP

#include <random>

#include "mixtura/states.hpp"

namespace mixtura {

/// Seeded generator of random test states. Deterministic for a fixed seed.
class StateSampler {
  public:
    explicit StateSampler(uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    Index index(Index lo, Index hi); // inclusive bounds
    Complex gaussian();

    CVector ket_vector(Index dim);
    Ket ket(Index dim);

    /// Haar-ish unitary: QR of a Gaussian matrix with the R diagonal phases
    /// absorbed into Q.
    Matrix unitary(Index dim);

    Matrix hermitian(Index dim);

    /// rho = G G^dagger / tr with G of shape dim x rank; rank < dim gives a
    /// genuinely rank-deficient operator.
    DensityOperator density(Index dim, Index rank);

    /// Positive weights summing to 1, each at least `floor`.
    std::vector<double> weights(Index count, double floor = 0.0);

    std::mt19937_64 &engine() {
        return rng_;
    }

  private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace mixtura

#endif
