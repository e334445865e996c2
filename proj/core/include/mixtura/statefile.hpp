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

#ifndef MIXTURA_STATEFILE_HPP
#define MIXTURA_STATEFILE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mixtura/scenarios.hpp"
#include "mixtura/states.hpp"

namespace mixtura {

enum class StateKind { Ket, Density, Ensemble, Preparation };

const char *state_kind_name(StateKind k);

/// Parsed form of the on-disk text schema: `key: value` lines with keys
/// `kind`, `dims`, `data` (flat re,im pairs, row-major), optional `weights`
/// and `labels`. Unknown keys land in `metadata`.
struct StateFile {
    StateKind kind;
    std::vector<Index> dims;
    std::vector<Complex> data;
    std::vector<double> weights;
    std::vector<std::string> labels;
    std::map<std::string, std::string> metadata;
};

/// Throws SyntaxError (with line/column) on malformed text and
/// InvariantViolation when the entry counts do not match kind and dims.
StateFile parse_state_file(std::string_view text);

/// Decimal round-trip is exact at 17 significant digits.
std::string serialize_state_file(const StateFile &file);

StateFile read_state_file(const std::string &path);
void write_state_file(const std::string &path, const StateFile &file);

Ket to_ket(const StateFile &file);
DensityOperator to_density(const StateFile &file, const Tolerance &tol = {});
Ensemble to_ensemble(const StateFile &file, const Tolerance &tol = {});
PreparationModel to_preparation(const StateFile &file);

StateFile from_ket(const Ket &k);
StateFile from_density(const DensityOperator &rho);
StateFile from_ensemble(const Ensemble &e);

} // namespace mixtura

#endif
