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

#include "lsvd/circuit.hpp"

#include <cmath>
#include <sstream>

#include "lsvd/error.hpp"

namespace lsvd {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kBlockTol = 1e-10;

int log2_exact(Index n) {
    int k = 0;
    while ((Index{1} << k) < n) ++k;
    return k;
}

void apply_op(const CircuitOp& op, ComplexVector& state, Index half) {
    switch (op.kind) {
        case OpKind::SystemUnitary:
            state.head(half) = op.unitary * state.head(half);
            state.tail(half) = op.unitary * state.tail(half);
            break;
        case OpKind::AncillaHadamard: {
            const double h = 1.0 / std::sqrt(2.0);
            const ComplexVector top = state.head(half);
            state.head(half) = h * (top + state.tail(half));
            state.tail(half) = h * (top - state.tail(half));
            break;
        }
        case OpKind::DilatedDiagonal:
            state = state.cwiseProduct(op.diagonal);
            break;
    }
}

}  // namespace

QubitLayout qubit_layout(Index levels) {
    if (levels < 1) throw Error(ErrorCode::InvalidParameter, "levels must be positive");
    QubitLayout layout;
    layout.levels = levels;
    layout.liouville_dim = levels * levels;
    layout.padded_dim = next_power_of_two(layout.liouville_dim);
    layout.k = log2_exact(layout.padded_dim);
    layout.d = layout.k + 1;
    return layout;
}

Statevector::Statevector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    const Index n = amplitudes_.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw Error(ErrorCode::DimensionMismatch,
                    "statevector length must be a power of two >= 2, got " + std::to_string(n));
    }
    if (!amplitudes_.allFinite()) throw Error(ErrorCode::NonFinite, "statevector has NaN/Inf");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "statevector norm is " << norm;
        throw Error(ErrorCode::InvalidParameter, msg.str());
    }
    num_qubits_ = log2_exact(n);
}

Statevector Statevector::basis(int num_qubits, Index index) {
    ComplexVector amps = ComplexVector::Zero(Index{1} << num_qubits);
    if (index < 0 || index >= amps.size()) {
        throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    }
    amps(index) = 1.0;
    return Statevector(std::move(amps));
}

Statevector Statevector::from_system(const ComplexVector& system, int k, double* norm) {
    const Index n = Index{1} << k;
    if (system.size() > n) {
        throw Error(ErrorCode::DimensionMismatch, "system vector longer than 2^k");
    }
    const double length = system.norm();
    if (!(length > 0.0)) throw Error(ErrorCode::InvalidParameter, "system vector is zero");
    ComplexVector amps = ComplexVector::Zero(2 * n);
    amps.head(system.size()) = system / length;
    if (norm) *norm = length;
    return Statevector(std::move(amps));
}

ComplexVector apply_circuit(const SvdCircuit& circuit, const ComplexVector& amplitudes) {
    if (amplitudes.size() != circuit.register_dim()) {
        std::ostringstream msg;
        msg << "state has " << amplitudes.size() << " amplitudes, circuit acts on "
            << circuit.register_dim();
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
    ComplexVector state = amplitudes;
    for (const auto& op : circuit.ops) apply_op(op, state, circuit.system_dim());
    return state;
}

ExactRun run_exact(const SvdCircuit& circuit, const Statevector& input) {
    ExactRun out;
    out.final_state = apply_circuit(circuit, input.amplitudes());
    out.conditioned = out.final_state.head(circuit.system_dim());
    out.success_prob = out.conditioned.squaredNorm();
    return out;
}

ComplexMatrix ancilla_zero_block(const SvdCircuit& circuit) {
    const Index n = circuit.system_dim();
    ComplexMatrix states = ComplexMatrix::Zero(2 * n, n);
    states.topRows(n).setIdentity();
    for (const auto& op : circuit.ops) {
        switch (op.kind) {
            case OpKind::SystemUnitary:
                states.topRows(n) = op.unitary * states.topRows(n);
                states.bottomRows(n) = op.unitary * states.bottomRows(n);
                break;
            case OpKind::AncillaHadamard: {
                const double h = 1.0 / std::sqrt(2.0);
                const ComplexMatrix top = states.topRows(n);
                states.topRows(n) = h * (top + states.bottomRows(n));
                states.bottomRows(n) = h * (top - states.bottomRows(n));
                break;
            }
            case OpKind::DilatedDiagonal:
                states = op.diagonal.asDiagonal() * states;
                break;
        }
    }
    return states.topRows(n);
}

ComplexMatrix composite_unitary(const SvdCircuit& circuit) {
    const Index dim = circuit.register_dim();
    ComplexMatrix out(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        out.col(j) = apply_circuit(circuit, ComplexVector::Unit(dim, j));
    }
    return out;
}

SvdCircuit build_svd_circuit(const SvdFactors& factors) {
    const Index n = factors.n();
    if (n < 1 || (n & (n - 1)) != 0 || factors.u.rows() != n || factors.vdag.rows() != n) {
        throw Error(ErrorCode::DimensionMismatch, "SVD factors must be square with power-of-two size");
    }
    SvdCircuit circuit;
    circuit.k = log2_exact(n);
    circuit.d = circuit.k + 1;
    circuit.scale = factors.scale;
    const DilatedUnitary dilated = dilate(factors);
    circuit.ops.push_back({OpKind::SystemUnitary, "Vdag", factors.vdag, {}});
    circuit.ops.push_back({OpKind::AncillaHadamard, "H", {}, {}});
    circuit.ops.push_back({OpKind::DilatedDiagonal, "U_Sigma", {}, dilated.diagonal()});
    circuit.ops.push_back({OpKind::AncillaHadamard, "H", {}, {}});
    circuit.ops.push_back({OpKind::SystemUnitary, "U", factors.u, {}});

    const ComplexMatrix expected = factors.scaled_matrix();
    const double err = (ancilla_zero_block(circuit) - expected).norm();
    if (err > kBlockTol * std::max(1.0, expected.norm())) {
        std::ostringstream msg;
        msg << "ancilla-0 block differs from U diag(sigma) Vdag by " << err;
        throw Error(ErrorCode::BlockIdentityViolation, msg.str());
    }
    return circuit;
}

ResourceEstimate estimate_resources(int d) {
    if (d < 2 || d > 27) {
        throw Error(ErrorCode::InvalidParameter,
                    "resource formulas are evaluated for 2 <= d <= 27, got " + std::to_string(d));
    }
    const auto ud = static_cast<std::uint64_t>(d);
    ResourceEstimate out;
    out.d = d;
    out.diagonal_gates = std::uint64_t{1} << (d + 1);
    out.unitary_gates_each = (ud - 1) * (ud - 1) * (std::uint64_t{1} << (2 * d - 2));
    out.total = ud * ud * (std::uint64_t{1} << (2 * d - 1));
    return out;
}

}  // namespace lsvd
