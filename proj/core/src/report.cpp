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

#include "mixtura/report.hpp"

#include <cstdio>

namespace mixtura {

std::string format_scalar(double x, OutputFormat format) {
    char buf[48];
    if (format == OutputFormat::Text) {
        std::snprintf(buf, sizeof buf, "%.6f", x);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
    }
    return buf;
}

std::string format_complex(const Complex &c, OutputFormat format) {
    char buf[96];
    if (format == OutputFormat::Text) {
        std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", c.real(), c.imag());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.real(), c.imag());
    }
    return buf;
}

std::string render_matrix(const std::string &name, const Matrix &m,
                          OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Machine) {
        out += name + ".dims=" + std::to_string(m.rows()) + "x" +
               std::to_string(m.cols()) + "\n";
        out += name + ".data=";
        for (Index i = 0; i < m.rows(); ++i) {
            for (Index j = 0; j < m.cols(); ++j) {
                if (i || j) {
                    out += ",";
                }
                out += format_complex(m(i, j), format);
            }
        }
        out += "\n";
        return out;
    }
    out += name + " (" + std::to_string(m.rows()) + "x" +
           std::to_string(m.cols()) + "):\n";
    for (Index i = 0; i < m.rows(); ++i) {
        out += "  [";
        for (Index j = 0; j < m.cols(); ++j) {
            out += (j ? "  " : " ") + format_complex(m(i, j), format);
        }
        out += " ]\n";
    }
    return out;
}

std::string render_report(const ScenarioReport &report, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::Machine) {
        out += std::string("verdict=") + verdict_name(report.verdict) + "\n";
        for (const auto &[label, value] : report.findings) {
            out += "finding." + label + "=" + format_scalar(value, format) +
                   "\n";
        }
        for (const auto &[label, m] : report.states) {
            out += render_matrix("state." + label, m, format);
        }
        return out;
    }
    out += std::string("verdict: ") + verdict_name(report.verdict) + "\n";
    for (const auto &[label, value] : report.findings) {
        out += "  " + label + " = " + format_scalar(value, format) + "\n";
    }
    for (const auto &[label, m] : report.states) {
        out += render_matrix(label, m, format);
    }
    return out;
}

} // namespace mixtura
