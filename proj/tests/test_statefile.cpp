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
#include "mixtura/random_states.hpp"
#include "mixtura/statefile.hpp"

using namespace mixtura;

TEST_CASE("parse a ket file") {
    auto file = parse_state_file(
        "# a comment\n"
        "kind: ket\n"
        "dims: [2]\n"
        "data: [0.70710678118654757, 0, 0.70710678118654757, 0]\n");
    CHECK(file.kind == StateKind::Ket);
    REQUIRE(file.dims.size() == 1);
    CHECK(file.dims[0] == 2);
    Ket k = to_ket(file);
    CHECK(k.amps()(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("parse a density file with multi-line data") {
    auto file = parse_state_file(
        "kind: density\n"
        "dims: [2]\n"
        "data: [\n"
        "  0.5, 0,  0, 0,\n"
        "  0, 0,  0.5, 0\n"
        "]\n"
        "note: maximally mixed\n");
    CHECK(file.kind == StateKind::Density);
    CHECK(file.metadata.at("note") == "maximally mixed");
    auto rho = to_density(file);
    CHECK((rho.matrix() - Matrix::Identity(2, 2) * 0.5).norm() < 1e-15);
}

TEST_CASE("parse an ensemble file") {
    auto file = parse_state_file(
        "kind: ensemble\n"
        "dims: [2]\n"
        "weights: [0.5, 0.5]\n"
        "labels: [zero, plus]\n"
        "data: [1, 0, 0, 0, 0.70710678118654757, 0, 0.70710678118654757, "
        "0]\n");
    auto e = to_ensemble(file);
    REQUIRE(e.entries().size() == 2);
    CHECK(e.entries()[0].weight == doctest::Approx(0.5));
    CHECK(file.labels[1] == "plus");
    Matrix rho = convex_mix(e).matrix();
    CHECK(rho(0, 0).real() == doctest::Approx(0.75));
}

TEST_CASE("parse a preparation file") {
    // Two entries of stride 1 + 2 + 2 = 5 complex numbers.
    auto file = parse_state_file(
        "kind: preparation\n"
        "dims: [2, 2]\n"
        "data: [\n"
        "  0.70710678118654757, 0,  1, 0, 0, 0,  1, 0, 0, 0,\n"
        "  0.70710678118654757, 0,  0, 0, 1, 0,  0, 0, 1, 0\n"
        "]\n");
    auto model = to_preparation(file);
    REQUIRE(model.entries().size() == 2);
    CHECK(model.system_dim() == 2);
    auto report = prepare_with_environment(model);
    CHECK(report.verdict == Verdict::ImproperMixture);
}

TEST_CASE("syntax errors carry line information") {
    try {
        (void)parse_state_file("kind: ket\ndims [2]\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        CHECK(e.line() == 2);
    }

    try {
        (void)parse_state_file("kind: ket\ndims: [2]\ndata: [1, oops]\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS((void)parse_state_file("kind: spinor\ndims: [2]\n"
                                           "data: [1, 0, 0, 0]\n"),
                    SyntaxError);
    CHECK_THROWS_AS((void)parse_state_file("kind: ket\nkind: ket\n"),
                    SyntaxError);
    CHECK_THROWS_AS((void)parse_state_file("kind: ket\ndims: [2]\n"
                                           "data: [1, 0, 0\n"),
                    SyntaxError);
}

TEST_CASE("structural validation") {
    // Entry count disagrees with dims.
    CHECK_THROWS_AS((void)parse_state_file("kind: ket\ndims: [3]\n"
                                           "data: [1, 0, 0, 0]\n"),
                    InvariantViolation);
    // Ensemble without weights.
    CHECK_THROWS_AS((void)parse_state_file("kind: ensemble\ndims: [2]\n"
                                           "data: [1, 0, 0, 0]\n"),
                    InvariantViolation);
    // Preparation data not a whole number of entries.
    CHECK_THROWS_AS((void)parse_state_file("kind: preparation\ndims: [2, 2]\n"
                                           "data: [1, 0, 1, 0]\n"),
                    InvariantViolation);
    // Missing a required key entirely.
    CHECK_THROWS_AS((void)parse_state_file("kind: ket\ndims: [2]\n"),
                    SyntaxError);
}

TEST_CASE("unnormalized data is rejected at conversion") {
    auto file = parse_state_file("kind: ket\ndims: [2]\n"
                                 "data: [1, 0, 1, 0]\n");
    CHECK_THROWS_AS((void)to_ket(file), NotNormalized);
}

TEST_CASE("serialize/parse round trip is exact") {
    StateSampler sampler(31);
    for (int t = 0; t < 20; ++t) {
        StateFile ket_file = from_ket(sampler.ket(sampler.index(2, 6)));
        auto round = parse_state_file(serialize_state_file(ket_file));
        CHECK(round.data == ket_file.data);

        StateFile rho_file = from_density(sampler.density(3, 2));
        auto round2 = parse_state_file(serialize_state_file(rho_file));
        CHECK(round2.data == rho_file.data);
    }

    // Serialization itself is deterministic.
    StateFile file = from_density(DensityOperator(Matrix::Identity(2, 2) * 0.5));
    file.metadata["source"] = "unit-test";
    CHECK(serialize_state_file(file) == serialize_state_file(file));
    auto reparsed = parse_state_file(serialize_state_file(file));
    CHECK(reparsed.metadata.at("source") == "unit-test");
}
