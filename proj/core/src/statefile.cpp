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

#include "mixtura/statefile.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mixtura/errors.hpp"

namespace mixtura {

namespace {

struct RawValue {
    std::string text;
    int line;
    int column;
};

std::string trim(std::string_view s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return std::string(s.substr(begin, end - begin));
}

// Splits a bracketed list into comma/whitespace separated tokens.
std::vector<std::string> list_tokens(const RawValue &value) {
    std::string body = trim(value.text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw SyntaxError("expected a [...] list", value.line, value.column);
    }
    body = body.substr(1, body.size() - 2);
    std::vector<std::string> tokens;
    std::string current;
    for (char c : body) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        tokens.push_back(current);
    }
    return tokens;
}

double parse_real(const std::string &token, const RawValue &where) {
    double out = 0.0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), out);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw SyntaxError("invalid number '" + token + "'", where.line,
                          where.column);
    }
    return out;
}

std::vector<double> parse_real_list(const RawValue &value) {
    std::vector<double> out;
    for (const auto &token : list_tokens(value)) {
        out.push_back(parse_real(token, value));
    }
    return out;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void append_list(std::string &out, const char *key,
                 const std::vector<double> &values) {
    out += key;
    out += ": [";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_real(values[i]);
    }
    out += "]\n";
}

size_t expected_entry_count(const StateFile &file) {
    switch (file.kind) {
        case StateKind::Ket:
            return static_cast<size_t>(file.dims.at(0));
        case StateKind::Density: {
            size_t d = static_cast<size_t>(file.dims.at(0));
            return d * d;
        }
        case StateKind::Ensemble:
            return file.weights.size() * static_cast<size_t>(file.dims.at(0));
        case StateKind::Preparation:
            return 0; // validated separately (variable entry count)
    }
    return 0;
}

} // namespace

const char *state_kind_name(StateKind k) {
    switch (k) {
        case StateKind::Ket:
            return "ket";
        case StateKind::Density:
            return "density";
        case StateKind::Ensemble:
            return "ensemble";
        case StateKind::Preparation:
            return "preparation";
    }
    return "unknown";
}

StateFile parse_state_file(std::string_view text) {
    std::map<std::string, RawValue> fields;
    std::map<std::string, std::string> metadata;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        int first_line = line_no;
        std::string stripped = trim(line);
        pos = eol + 1;
        if (stripped.empty() || stripped[0] == '#') {
            if (eol == text.size()) {
                break;
            }
            continue;
        }
        size_t colon = stripped.find(':');
        if (colon == std::string::npos) {
            throw SyntaxError("expected 'key: value'", first_line, 1);
        }
        std::string key = trim(stripped.substr(0, colon));
        std::string value = trim(stripped.substr(colon + 1));
        // A list may continue on following lines until its closing bracket.
        while (!value.empty() && value.front() == '[' &&
               value.find(']') == std::string::npos) {
            if (pos > text.size()) {
                throw SyntaxError("unterminated list", first_line,
                                  static_cast<int>(colon) + 2);
            }
            size_t next_eol = text.find('\n', pos);
            if (next_eol == std::string_view::npos) {
                next_eol = text.size();
            }
            value += " " + trim(text.substr(pos, next_eol - pos));
            pos = next_eol + 1;
            ++line_no;
        }
        if (fields.count(key) || metadata.count(key)) {
            throw SyntaxError("duplicate key '" + key + "'", first_line, 1);
        }
        if (key == "kind" || key == "dims" || key == "data" ||
            key == "weights" || key == "labels") {
            fields.emplace(key,
                           RawValue{value, first_line,
                                    static_cast<int>(colon) + 2});
        } else {
            metadata.emplace(key, value);
        }
        if (eol == text.size()) {
            break;
        }
    }

    auto require = [&](const char *key) -> const RawValue & {
        auto it = fields.find(key);
        if (it == fields.end()) {
            throw SyntaxError(std::string("missing required key '") + key +
                                  "'",
                              line_no, 1);
        }
        return it->second;
    };

    StateFile file;
    file.metadata = std::move(metadata);

    const RawValue &kind = require("kind");
    if (kind.text == "ket") {
        file.kind = StateKind::Ket;
    } else if (kind.text == "density") {
        file.kind = StateKind::Density;
    } else if (kind.text == "ensemble") {
        file.kind = StateKind::Ensemble;
    } else if (kind.text == "preparation") {
        file.kind = StateKind::Preparation;
    } else {
        throw SyntaxError("unknown kind '" + kind.text + "'", kind.line,
                          kind.column);
    }

    for (double d : parse_real_list(require("dims"))) {
        if (d < 1 || d != static_cast<double>(static_cast<Index>(d))) {
            throw SyntaxError("dims must be positive integers",
                              fields.at("dims").line,
                              fields.at("dims").column);
        }
        file.dims.push_back(static_cast<Index>(d));
    }

    const RawValue &data = require("data");
    std::vector<double> flat = parse_real_list(data);
    if (flat.size() % 2 != 0) {
        throw SyntaxError("data must hold flat re,im pairs", data.line,
                          data.column);
    }
    for (size_t i = 0; i < flat.size(); i += 2) {
        file.data.emplace_back(flat[i], flat[i + 1]);
    }

    if (auto it = fields.find("weights"); it != fields.end()) {
        file.weights = parse_real_list(it->second);
    }
    if (auto it = fields.find("labels"); it != fields.end()) {
        file.labels = list_tokens(it->second);
    }

    // Structural validation against kind/dims.
    size_t expected_dims =
        file.kind == StateKind::Preparation ? 2 : 1;
    if (file.dims.size() != expected_dims) {
        throw InvariantViolation(std::string(state_kind_name(file.kind)) +
                                 " file needs " +
                                 std::to_string(expected_dims) +
                                 " dimension(s)");
    }
    if (file.kind == StateKind::Ensemble && file.weights.empty()) {
        throw InvariantViolation("ensemble file needs a weights list");
    }
    if (file.kind == StateKind::Preparation) {
        size_t stride = 1 + static_cast<size_t>(file.dims[0]) +
                        static_cast<size_t>(file.dims[1]);
        if (file.data.empty() || file.data.size() % stride != 0) {
            throw InvariantViolation(
                "preparation data must hold whole (gamma, alpha, eta) "
                "entries of " +
                std::to_string(stride) + " complex numbers each");
        }
    } else if (file.data.size() != expected_entry_count(file)) {
        throw InvariantViolation(
            std::string(state_kind_name(file.kind)) + " file expects " +
            std::to_string(expected_entry_count(file)) +
            " complex entries, found " + std::to_string(file.data.size()));
    }
    return file;
}

std::string serialize_state_file(const StateFile &file) {
    std::string out;
    out += "kind: ";
    out += state_kind_name(file.kind);
    out += "\n";

    std::vector<double> dims;
    for (Index d : file.dims) {
        dims.push_back(static_cast<double>(d));
    }
    append_list(out, "dims", dims);

    if (!file.weights.empty()) {
        append_list(out, "weights", file.weights);
    }
    if (!file.labels.empty()) {
        out += "labels: [";
        for (size_t i = 0; i < file.labels.size(); ++i) {
            if (i) {
                out += ", ";
            }
            out += file.labels[i];
        }
        out += "]\n";
    }

    std::vector<double> flat;
    for (const Complex &c : file.data) {
        flat.push_back(c.real());
        flat.push_back(c.imag());
    }
    append_list(out, "data", flat);

    for (const auto &[key, value] : file.metadata) {
        out += key + ": " + value + "\n";
    }
    return out;
}

StateFile read_state_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvariantViolation("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_file(buffer.str());
}

void write_state_file(const std::string &path, const StateFile &file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvariantViolation("cannot write file: " + path);
    }
    out << serialize_state_file(file);
}

Ket to_ket(const StateFile &file) {
    if (file.kind != StateKind::Ket) {
        throw InvariantViolation("state file is not a ket");
    }
    CVector amps(file.dims[0]);
    for (Index i = 0; i < amps.size(); ++i) {
        amps(i) = file.data[static_cast<size_t>(i)];
    }
    return Ket(std::move(amps));
}

DensityOperator to_density(const StateFile &file, const Tolerance &tol) {
    if (file.kind != StateKind::Density) {
        throw InvariantViolation("state file is not a density operator");
    }
    Index d = file.dims[0];
    Matrix m(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            m(i, j) = file.data[static_cast<size_t>(i * d + j)];
        }
    }
    return DensityOperator(std::move(m), tol);
}

Ensemble to_ensemble(const StateFile &file, const Tolerance &tol) {
    if (file.kind != StateKind::Ensemble) {
        throw InvariantViolation("state file is not an ensemble");
    }
    Index d = file.dims[0];
    std::vector<EnsembleEntry> entries;
    for (size_t s = 0; s < file.weights.size(); ++s) {
        CVector amps(d);
        for (Index i = 0; i < d; ++i) {
            amps(i) = file.data[s * static_cast<size_t>(d) +
                                static_cast<size_t>(i)];
        }
        entries.push_back({file.weights[s], Ket(std::move(amps))});
    }
    return Ensemble(std::move(entries), tol);
}

PreparationModel to_preparation(const StateFile &file) {
    if (file.kind != StateKind::Preparation) {
        throw InvariantViolation("state file is not a preparation model");
    }
    Index ds = file.dims[0];
    Index de = file.dims[1];
    size_t stride = 1 + static_cast<size_t>(ds) + static_cast<size_t>(de);
    std::vector<PreparationEntry> entries;
    for (size_t base = 0; base < file.data.size(); base += stride) {
        Complex gamma = file.data[base];
        CVector alpha(ds);
        for (Index i = 0; i < ds; ++i) {
            alpha(i) = file.data[base + 1 + static_cast<size_t>(i)];
        }
        CVector eta(de);
        for (Index k = 0; k < de; ++k) {
            eta(k) = file.data[base + 1 + static_cast<size_t>(ds) +
                               static_cast<size_t>(k)];
        }
        entries.push_back(
            {gamma, Ket(std::move(alpha)), Ket(std::move(eta))});
    }
    return PreparationModel(std::move(entries));
}

StateFile from_ket(const Ket &k) {
    StateFile file;
    file.kind = StateKind::Ket;
    file.dims = {k.dim()};
    for (Index i = 0; i < k.dim(); ++i) {
        file.data.push_back(k.amps()(i));
    }
    return file;
}

StateFile from_density(const DensityOperator &rho) {
    StateFile file;
    file.kind = StateKind::Density;
    file.dims = {rho.dim()};
    for (Index i = 0; i < rho.dim(); ++i) {
        for (Index j = 0; j < rho.dim(); ++j) {
            file.data.push_back(rho.matrix()(i, j));
        }
    }
    return file;
}

StateFile from_ensemble(const Ensemble &e) {
    StateFile file;
    file.kind = StateKind::Ensemble;
    file.dims = {e.entries().front().ket.dim()};
    for (const auto &entry : e.entries()) {
        file.weights.push_back(entry.weight);
        for (Index i = 0; i < entry.ket.dim(); ++i) {
            file.data.push_back(entry.ket.amps()(i));
        }
    }
    return file;
}

} // namespace mixtura
