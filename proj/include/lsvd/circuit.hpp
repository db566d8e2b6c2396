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
#include <string>
#include <vector>

#include "lsvd/dilation.hpp"
#include "lsvd/numerics.hpp"

namespace lsvd {

/// Register sizes for an r-level system: Liouville dimension r^2, padded to
/// n = 2^k, plus one ancilla, d = k + 1.
struct QubitLayout {
    Index levels = 0;
    Index liouville_dim = 0;
    Index padded_dim = 0;
    int k = 0;
    int d = 0;
};

QubitLayout qubit_layout(Index levels);

/// Unit-norm amplitudes on d qubits. Basis index = ancilla * 2^k + system
/// index (the ancilla is the most significant qubit).
class Statevector {
public:
    explicit Statevector(ComplexVector amplitudes);

    static Statevector basis(int num_qubits, Index index);

    /// Embeds a system vector (length <= 2^k) with the ancilla in |0>,
    /// zero-padding and normalizing it. `norm` receives the original norm.
    static Statevector from_system(const ComplexVector& system, int k, double* norm = nullptr);

    const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
    int num_qubits() const noexcept { return num_qubits_; }
    Index dim() const noexcept { return amplitudes_.size(); }

private:
    ComplexVector amplitudes_;
    int num_qubits_ = 0;
};

enum class OpKind { SystemUnitary, AncillaHadamard, DilatedDiagonal };

struct CircuitOp {
    OpKind kind;
    std::string name;
    ComplexMatrix unitary;   // SystemUnitary only, 2^k x 2^k
    ComplexVector diagonal;  // DilatedDiagonal only, length 2^d
};

/// V^dagger on the system, H on the ancilla, the dilated diagonal on the full
/// register, H on the ancilla, U on the system.
struct SvdCircuit {
    int k = 0;
    int d = 0;
    double scale = 1.0;
    std::vector<CircuitOp> ops;

    Index system_dim() const noexcept { return Index{1} << k; }
    Index register_dim() const noexcept { return Index{1} << d; }
};

/// Builds the circuit and checks that its ancilla-0 block equals
/// u * diag(sigma) * vdag to 1e-10 (BlockIdentityViolation otherwise).
SvdCircuit build_svd_circuit(const SvdFactors& factors);

/// Applies the ops in order to a full-register state (no measurement).
ComplexVector apply_circuit(const SvdCircuit& circuit, const ComplexVector& amplitudes);

struct ExactRun {
    ComplexVector conditioned;  // ancilla-0 amplitudes, unnormalized
    double success_prob = 0.0;
    ComplexVector final_state;  // all 2^d amplitudes
};

ExactRun run_exact(const SvdCircuit& circuit, const Statevector& input);

/// Block <0|_a C |0>_a of the composite circuit operator C.
ComplexMatrix ancilla_zero_block(const SvdCircuit& circuit);

/// Full 2^d x 2^d composite operator.
ComplexMatrix composite_unitary(const SvdCircuit& circuit);

/// Order-of-magnitude gate counts from the asymptotic complexity formulas,
/// evaluated literally: diagonal 2^(d+1), each of U and V^dagger
/// (d-1)^2 2^(2d-2), total d^2 2^(2d-1). Valid for 2 <= d <= 27.
struct ResourceEstimate {
    int d = 0;
    std::uint64_t diagonal_gates = 0;
    std::uint64_t unitary_gates_each = 0;
    std::uint64_t total = 0;
};

ResourceEstimate estimate_resources(int d);

}  // namespace lsvd
