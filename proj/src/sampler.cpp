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

#include "lsvd/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lsvd/error.hpp"

namespace lsvd {

std::uint64_t ShotResult::count(std::uint64_t index) const {
    const auto it = counts.find(index);
    return it == counts.end() ? 0 : it->second;
}

ShotResult sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw Error(ErrorCode::InvalidParameter, "shots must be >= 1");
    const ComplexVector& amps = state.amplitudes();
    const Index dim = amps.size();
    std::vector<double> probs(static_cast<std::size_t>(dim));
    for (Index i = 0; i < dim; ++i) probs[static_cast<std::size_t>(i)] = std::norm(amps(i));

    std::size_t last = 0;
    double mass = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        mass += probs[i];
        if (probs[i] > 0.0) last = i;
    }

    ShotResult result;
    result.shots = shots;
    result.seed = seed;
    result.num_qubits = state.num_qubits();

    std::mt19937_64 rng(seed);
    std::uint64_t remaining = shots;
    for (std::size_t i = 0; i < last && remaining > 0; ++i) {
        if (probs[i] <= 0.0) continue;
        const double p = std::clamp(probs[i] / mass, 0.0, 1.0);
        std::binomial_distribution<std::uint64_t> draw(remaining, p);
        const std::uint64_t hits = draw(rng);
        if (hits > 0) result.counts[i] = hits;
        remaining -= hits;
        mass -= probs[i];
        if (mass <= 0.0) break;
    }
    if (remaining > 0) result.counts[last] += remaining;

    const auto half = std::uint64_t{1} << (result.num_qubits - 1);
    for (const auto& [index, hits] : result.counts) {
        if (index < half) result.postselected_shots += hits;
    }
    return result;
}

std::vector<double> estimate_populations(const ShotResult& result, Index r, int k) {
    if (r < 1 || k < 1 || r * r > (Index{1} << k) || k + 1 != result.num_qubits) {
        std::ostringstream msg;
        msg << "r = " << r << ", k = " << k << " inconsistent with a " << result.num_qubits
            << "-qubit shot record";
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
    if (result.postselected_shots == 0) {
        throw Error(ErrorCode::AllZeroDiagonal, "no shots survived ancilla postselection");
    }
    std::vector<double> pops(static_cast<std::size_t>(r));
    double total = 0.0;
    const auto post = static_cast<double>(result.postselected_shots);
    for (Index i = 0; i < r; ++i) {
        const auto slot = static_cast<std::uint64_t>(i * (r + 1));
        const double raw = std::sqrt(static_cast<double>(result.count(slot)) / post);
        pops[static_cast<std::size_t>(i)] = raw;
        total += raw;
    }
    if (total == 0.0) {
        throw Error(ErrorCode::AllZeroDiagonal, "no counts observed on any diagonal slot");
    }
    for (auto& p : pops) p /= total;
    return pops;
}

}  // namespace lsvd
