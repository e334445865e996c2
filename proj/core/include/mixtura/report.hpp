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

#ifndef MIXTURA_REPORT_HPP
#define MIXTURA_REPORT_HPP

#include <string>

#include "mixtura/scenarios.hpp"

namespace mixtura {

enum class OutputFormat { Text, Machine };

/// Fixed 6-decimal rendering in text mode, full 17-digit precision in
/// machine mode.
std::string format_scalar(double x, OutputFormat format);
std::string format_complex(const Complex &c, OutputFormat format);

/// Text mode: bracketed rows. Machine mode: `<name>.dims=` and a flat
/// row-major `<name>.data=` re,im list.
std::string render_matrix(const std::string &name, const Matrix &m,
                          OutputFormat format);

/// Renders states, scalar findings (each exactly once as `finding.<label>=`)
/// and the verdict.
std::string render_report(const ScenarioReport &report, OutputFormat format);

} // namespace mixtura

#endif
