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

#include "lsvd/pipeline.hpp"

#include <cmath>
#include <sstream>

#include "lsvd/dilation.hpp"
#include "lsvd/error.hpp"

namespace lsvd {

std::vector<double> time_grid(double dt, double t_end) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::InvalidParameter, "dt must be positive");
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw Error(ErrorCode::InvalidParameter, "t_end must be non-negative");
    }
    const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    std::vector<double> grid(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i) * dt;
    return grid;
}

QuantumRun quantum_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                          std::span<const double> times, const QuantumRunOptions& options) {
    require_time_grid(times);
    if (options.mode == TraceMode::Classical) {
        throw Error(ErrorCode::InvalidParameter, "quantum_evolve runs exact or sampled mode");
    }
    if (options.mode == TraceMode::Sampled && options.shots < 1) {
        throw Error(ErrorCode::InvalidParameter, "shots must be >= 1");
    }
    if (rho0.dim() != model.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "initial state does not match model dimension");
    }

    const Superoperator superop = build_superoperator(model);
    const Index r = model.dim();
    const QubitLayout layout = qubit_layout(r);
    double input_norm = 0.0;
    const Statevector input = Statevector::from_system(vectorize(rho0), layout.k, &input_norm);
    const std::size_t count = times.size();

    QuantumRun run;
    run.layout = layout;
    PopulationTrace& trace = run.trace;
    trace.mode = options.mode;
    trace.times.assign(times.begin(), times.end());
    trace.labels = model.labels;
    trace.populations.assign(count, std::vector<double>(static_cast<std::size_t>(r)));
    trace.success_prob.assign(count, 0.0);
    trace.scales.assign(count, 1.0);
    std::vector<ComplexMatrix> states(options.record_states ? count : 0);
    if (options.mode == TraceMode::Sampled) run.postselected_shots.assign(count, 0);

    parallel_for(
        count,
        [&](std::size_t i) {
            const ComplexMatrix m = pad_to_power_of_two(propagator(superop, times[i], options.tol));
            const SvdFactors factors = decompose(m, options.tol);
            const SvdCircuit circuit = build_svd_circuit(factors);
            const ExactRun exact = run_exact(circuit, input);
            trace.scales[i] = factors.scale;
            auto& pops = trace.populations[i];

            if (options.mode == TraceMode::Exact) {
                trace.success_prob[i] = exact.success_prob;
                const ComplexVector vec_rho =
                    exact.conditioned.head(r * r) * (factors.scale * input_norm);
                ComplexMatrix rho = devectorize_matrix(vec_rho, r);
                for (Index l = 0; l < r; ++l) pops[static_cast<std::size_t>(l)] = rho(l, l).real();
                if (options.record_states) states[i] = std::move(rho);
                return;
            }

            const ShotResult shots =
                sample(Statevector(exact.final_state / exact.final_state.norm()), options.shots,
                       substream_seed(options.seed, i));
            pops = estimate_populations(shots, r, layout.k);
            run.postselected_shots[i] = shots.postselected_shots;
            trace.success_prob[i] =
                static_cast<double>(shots.postselected_shots) / static_cast<double>(shots.shots);
        },
        options.workers);

    if (options.record_states) trace.states = std::move(states);
    return run;
}

}  // namespace lsvd
