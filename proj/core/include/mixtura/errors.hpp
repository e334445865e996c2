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

#ifndef MIXTURA_ERRORS_HPP
#define MIXTURA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixtura {

/// Base class for all domain errors. `code()` is a stable machine-readable
/// identifier the CLI maps to diagnostics and exit status.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string &code() const noexcept {
        return code_;
    }

  private:
    std::string code_;
};

#define MIXTURA_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                               \
      public:                                                                 \
        explicit NAME(const std::string &message) : Error(#NAME, message) {}  \
    }

MIXTURA_DEFINE_ERROR(NotHermitian);
MIXTURA_DEFINE_ERROR(NotNormalized);
MIXTURA_DEFINE_ERROR(DimensionMismatch);
MIXTURA_DEFINE_ERROR(WeightsNotNormalized);
MIXTURA_DEFINE_ERROR(DuplicateKet);
MIXTURA_DEFINE_ERROR(InvariantViolation);
MIXTURA_DEFINE_ERROR(MarginalsDiffer);
MIXTURA_DEFINE_ERROR(NotADecomposition);
MIXTURA_DEFINE_ERROR(AncillaTooSmall);
MIXTURA_DEFINE_ERROR(DegenerateWeights);
MIXTURA_DEFINE_ERROR(MarginalMismatch);
MIXTURA_DEFINE_ERROR(ZeroVector);

#undef MIXTURA_DEFINE_ERROR

/// Text-format error carrying a source location.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string &message, int line, int column)
        : Error("SyntaxError",
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept {
        return line_;
    }
    int column() const noexcept {
        return column_;
    }

  private:
    int line_;
    int column_;
};

} // namespace mixtura

#endif
