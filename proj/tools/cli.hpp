// Copyright 2026 The lsvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsvd/pipeline.hpp"

namespace lsvd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;       // fmo | rpm | evolve | sweep | resources | validate | export
    std::string model_source;  // built-in name or file path
    int sites = 3;
    std::optional<double> dt;
    std::optional<double> t_end;
    TraceMode mode = TraceMode::Exact;
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    std::optional<double> theta;
    bool sweep_theta = false;
    std::optional<double> gamma_deph;
    std::optional<double> gamma_diss;
    std::optional<double> gamma_sink;
    std::optional<double> gamma_shelf;
    std::optional<double> b0;
    std::optional<double> hyperfine_az;
    int qubits = 0;
    std::string out;   // empty: stdout
    std::string meta;  // csv metadata path; default <out>.meta.json, or stderr
    Format format = Format::Csv;
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

std::string to_csv(const ResultTable& table);

/// Parses argv and dispatches. Returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints one PASS/FAIL line per model invariant; exit 0 when all pass,
/// 2 when any fails or the file is malformed, 4 when unreadable.
int validate(const std::string& source, std::ostream& out, std::ostream& err);

}  // namespace lsvd::cli
