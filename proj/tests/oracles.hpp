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

#include <cmath>
#include <random>

#include "lsvd/lindblad.hpp"
#include "lsvd/numerics.hpp"

namespace lsvd::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    }
    return m;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Index n) {
    return random_matrix(rng, n, n);
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Index n) {
    const ComplexMatrix b = random_matrix(rng, n);
    return b + b.adjoint();
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, Index n) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Random full-rank density matrix B B^dagger / tr(B B^dagger).
inline ComplexMatrix random_density(std::mt19937_64& rng, Index n) {
    const ComplexMatrix b = random_matrix(rng, n);
    ComplexMatrix rho = b * b.adjoint();
    return rho / rho.trace();
}

inline ComplexVector random_vector(std::mt19937_64& rng, Index n) {
    return random_matrix(rng, n, 1);
}

/// Random Hermitian H and `channels` random collapse operators with rates
/// in [0, 1).
inline LindbladModel random_model(std::mt19937_64& rng, Index r, int channels) {
    std::uniform_real_distribution<double> rate(0.0, 1.0);
    LindbladModel model;
    model.name = "random";
    model.time_unit = "arb";
    model.hamiltonian = 0.5 * random_hermitian(rng, r);
    for (int c = 0; c < channels; ++c) {
        model.channels.push_back({random_matrix(rng, r) / std::sqrt(double(r)), rate(rng),
                                  "c" + std::to_string(c)});
    }
    for (Index i = 0; i < r; ++i) model.labels.push_back(std::to_string(i));
    return model;
}

/// Master-equation right-hand side written directly in matrix form:
/// -i[H, rho] + sum_i g_i (C rho C^dagger - {C^dagger C, rho} / 2).
inline ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
    const ComplexMatrix& h = model.hamiltonian;
    ComplexMatrix out = -kI * (h * rho - rho * h);
    for (const auto& ch : model.channels) {
        const ComplexMatrix cdc = ch.op.adjoint() * ch.op;
        out += ch.rate * (ch.op * rho * ch.op.adjoint() - 0.5 * (cdc * rho + rho * cdc));
    }
    return out;
}

/// Fixed-step RK4 on the matrix-form equation.
inline ComplexMatrix rk4_evolve(const LindbladModel& model, ComplexMatrix rho, double t,
                                int steps) {
    const double h = t / steps;
    for (int s = 0; s < steps; ++s) {
        const ComplexMatrix k1 = lindblad_rhs(model, rho);
        const ComplexMatrix k2 = lindblad_rhs(model, rho + 0.5 * h * k1);
        const ComplexMatrix k3 = lindblad_rhs(model, rho + 0.5 * h * k2);
        const ComplexMatrix k4 = lindblad_rhs(model, rho + h * k3);
        rho += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

}  // namespace lsvd::testing
