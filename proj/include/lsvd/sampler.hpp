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
#include <map>
#include <string_view>
#include <vector>

#include "lsvd/circuit.hpp"

namespace lsvd {

inline constexpr std::string_view kRngAlgorithm = "std::mt19937_64";
inline constexpr std::string_view kMultinomialMethod = "sequential conditional binomial";

/// Seed for the substream of work item `index` (time point or sweep angle).
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return seed ^ index;
}

/// Outcome histogram of `shots` full-register measurements.
struct ShotResult {
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> count, zeros omitted
    std::uint64_t postselected_shots = 0;           // outcomes with ancilla = 0
    std::uint64_t seed = 0;
    int num_qubits = 0;

    std::uint64_t count(std::uint64_t index) const;
};

/// Draws `shots` outcomes from |amplitude|^2. Deterministic for a fixed seed.
ShotResult sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed);

/// Level populations from postselected counts of a column-stacked density
/// matrix: raw_i = sqrt(count(i*(r+1)) / postselected), normalized to sum 1.
///
/// The ancilla-0 amplitudes are proportional to vec(rho), the diagonal
/// entries rho_ii are real and non-negative, so the measured probability
/// at slot i*(r+1) is c*rho_ii^2 and trace(rho) = 1 fixes c. The square root
/// makes the estimator biased upward for rarely observed levels.
std::vector<double> estimate_populations(const ShotResult& result, Index r, int k);

}  // namespace lsvd
