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

#ifndef MIXTURA_SELFTEST_HPP
#define MIXTURA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mixtura {

struct SuiteResult {
    std::string name;
    bool passed;
    int trials;
    double worst_residual; // largest residual seen across trials
    std::string detail;    // first failure, if any
};

/// The randomized verification suites: oracle-checked partial traces,
/// Schmidt round trips, purification, the steering lemma and theorem, the
/// composite-reconstruction demonstration, preparation classification, and
/// premeasurement decoherence. Deterministic per seed.
std::vector<SuiteResult> run_selftest(uint64_t seed);

} // namespace mixtura

#endif
