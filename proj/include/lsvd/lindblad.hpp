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

#include <span>
#include <string>
#include <vector>

#include "lsvd/numerics.hpp"
#include "lsvd/trace.hpp"

namespace lsvd {

namespace units {

inline constexpr double kSpeedOfLightCmPerS = 2.99792458e10;
inline constexpr double kPi = 3.14159265358979323846;

/// Angular frequency in rad/fs for a wavenumber in cm^-1 (hbar = 1).
constexpr double wavenumber_to_rad_per_fs(double wavenumber) {
    return 2.0 * kPi * kSpeedOfLightCmPerS * wavenumber * 1e-15;
}

}  // namespace units

/// One collapse operator C with its rate gamma; enters the generator as
/// gamma * (C rho C^dagger - {C^dagger C, rho} / 2).
struct Channel {
    ComplexMatrix op;
    double rate = 0.0;
    std::string label;
};

/// Hamiltonian plus weighted collapse operators on an r-level system.
/// Energies are angular frequencies in `time_unit`^-1, rates in `time_unit`^-1.
struct LindbladModel {
    std::string name;
    std::string time_unit;
    ComplexMatrix hamiltonian;
    std::vector<Channel> channels;
    std::vector<std::string> labels;
    // Free-form provenance notes carried into run metadata.
    std::vector<std::string> notes;

    Index dim() const noexcept { return hamiltonian.rows(); }
};

struct ModelCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Structural and physical checks: shapes, finiteness, label count,
/// Hermitian H, non-negative rates, trace-preserving generator. Never throws
/// for an invalid model; each failing invariant is reported.
std::vector<ModelCheck> check_model(const LindbladModel& model);

/// Throws (InvalidModel / NotHermitian / DimensionMismatch) on the first
/// failing invariant.
void validate_model(const LindbladModel& model);

enum class Validation { None, Warn, Strict };

struct DensityCheck {
    double hermiticity = 0.0;     // ||rho - rho^dagger||_F
    double trace_error = 0.0;     // |tr(rho) - 1|
    double min_eigenvalue = 0.0;  // of the Hermitian part

    bool ok(double herm_tol = 1e-10, double trace_tol = 1e-10,
            double eig_floor = -1e-8) const noexcept {
        return hermiticity <= herm_tol && trace_error <= trace_tol &&
               min_eigenvalue >= eig_floor;
    }
};

DensityCheck check_density(const ComplexMatrix& rho);

/// r x r density matrix. With Validation::Warn a violated invariant is
/// reported on std::clog; Validation::Strict throws InvalidModel.
class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(ComplexMatrix entries, Validation validation = Validation::Warn);

    const ComplexMatrix& entries() const noexcept { return entries_; }
    Index dim() const noexcept { return entries_.rows(); }
    std::vector<double> populations() const;

private:
    ComplexMatrix entries_;
};

/// Column stacking: element j*r + i is rho(i, j).
ComplexVector vectorize(const ComplexMatrix& rho);
ComplexVector vectorize(const DensityMatrix& rho);

/// Inverse of vectorize. Throws LengthMismatch unless v.size() == r*r.
DensityMatrix devectorize(const ComplexVector& v, Index r,
                          Validation validation = Validation::None);
ComplexMatrix devectorize_matrix(const ComplexVector& v, Index r);

/// The r^2 x r^2 Liouville-space generator acting on column-stacked rho.
struct Superoperator {
    ComplexMatrix matrix;

    Index dim() const noexcept { return matrix.rows(); }
};

Superoperator build_superoperator(const LindbladModel& model);

/// ||vec(I)^dagger L||_2 / ||L||_F; zero for a trace-preserving generator.
double trace_preservation_error(const Superoperator& superop);

/// exp(L t). Throws InvalidParameter for t < 0.
ComplexMatrix propagator(const Superoperator& superop, double t, double tol = kDefaultTol);

struct EvolveOptions {
    bool record_states = false;
    double tol = kDefaultTol;
};

/// Classical Liouville-space propagation, one exp(L t) per output time.
/// Times must be non-negative and ascending.
PopulationTrace classical_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                                 std::span<const double> times, const EvolveOptions& options = {});

/// Checks that times are non-negative and ascending; throws InvalidParameter.
void require_time_grid(std::span<const double> times);

}  // namespace lsvd
