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

#include <benchmark/benchmark.h>

#include "mixtura/decompositions.hpp"
#include "mixtura/random_states.hpp"
#include "mixtura/states.hpp"

using namespace mixtura;

static void BM_PartialTrace(benchmark::State &state) {
    Index d = state.range(0);
    StateSampler sampler(7);
    BipartiteDims dims{d, d};
    DensityOperator rho = sampler.density(dims.joint(), dims.joint());
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            partial_trace_matrix(rho.matrix(), dims, Keep::A));
    }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(5);

static void BM_Tensor(benchmark::State &state) {
    Index d = state.range(0);
    StateSampler sampler(7);
    Matrix a = sampler.hermitian(d);
    Matrix b = sampler.hermitian(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor(a, b));
    }
}
BENCHMARK(BM_Tensor)->Arg(2)->Arg(4)->Arg(8);

static void BM_Schmidt(benchmark::State &state) {
    Index d = state.range(0);
    StateSampler sampler(7);
    BipartiteDims dims{d, d};
    Ket psi = sampler.ket(dims.joint());
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmidt(psi, dims));
    }
}
BENCHMARK(BM_Schmidt)->Arg(2)->Arg(4)->Arg(5);

static void BM_EigHermitian(benchmark::State &state) {
    Index d = state.range(0);
    StateSampler sampler(7);
    Matrix m = sampler.hermitian(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(m));
    }
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_GhjwSteer(benchmark::State &state) {
    Index d = state.range(0);
    StateSampler sampler(7);
    DensityOperator rho = sampler.density(d, d);
    Purification pure = purify(rho);
    // Steer into the spectral ensemble itself.
    auto eig = eig_hermitian(rho.matrix());
    std::vector<EnsembleEntry> entries;
    for (Index j = 0; j < d; ++j) {
        entries.push_back({eig.values(j), Ket(eig.vectors.col(j))});
    }
    Ensemble target(std::move(entries));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ghjw_steer(pure.psi, pure.dims, target));
    }
}
BENCHMARK(BM_GhjwSteer)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
