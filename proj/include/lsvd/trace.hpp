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

#include <string>
#include <string_view>
#include <vector>

#include "lsvd/numerics.hpp"

namespace lsvd {

enum class TraceMode { Classical, Exact, Sampled };

std::string_view to_string(TraceMode mode) noexcept;

/// Level populations over time, one row per output time.
struct PopulationTrace {
    TraceMode mode = TraceMode::Classical;
    std::vector<double> times;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> populations;
    // Probability of the ancilla-0 branch (1 for classical propagation).
    std::vector<double> success_prob;
    // Dilation scale factor per time point (1 for classical propagation).
    std::vector<double> scales;
    // Full density matrices, filled only when requested.
    std::vector<ComplexMatrix> states;

    std::size_t size() const noexcept { return times.size(); }
};

}  // namespace lsvd
