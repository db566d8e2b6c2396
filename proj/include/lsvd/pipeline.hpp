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
#include <span>

#include "lsvd/circuit.hpp"
#include "lsvd/lindblad.hpp"
#include "lsvd/parallel.hpp"
#include "lsvd/sampler.hpp"
#include "lsvd/trace.hpp"

namespace lsvd {

inline constexpr std::uint64_t kDefaultShots = std::uint64_t{1} << 19;

struct QuantumRunOptions {
    TraceMode mode = TraceMode::Exact;  // Exact or Sampled
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    bool record_states = false;  // exact mode only
    std::size_t workers = worker_count();
};

struct QuantumRun {
    PopulationTrace trace;
    QubitLayout layout;
    std::vector<std::uint64_t> postselected_shots;  // sampled mode only
};

/// Runs the dilated-SVD circuit once per output time: M = exp(L t) is padded,
/// decomposed, dilated and emulated on d = k + 1 qubits. Exact mode reads the
/// ancilla-0 amplitudes and multiplies the scale back; sampled mode measures
/// `shots` times with substream seed (seed ^ time index) and estimates
/// populations from postselected counts.
QuantumRun quantum_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                          std::span<const double> times, const QuantumRunOptions& options = {});

/// Evenly spaced grid 0, dt, 2 dt, ... up to t_end (a point within 1e-9 dt of
/// t_end counts as on the grid).
std::vector<double> time_grid(double dt, double t_end);

}  // namespace lsvd
