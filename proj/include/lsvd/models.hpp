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
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "lsvd/lindblad.hpp"
#include "lsvd/model_file.hpp"
#include "lsvd/pipeline.hpp"

namespace lsvd {

// ---------------------------------------------------------------------------
// FMO exciton transport

/// Single-excitation FMO parameters. Energies in cm^-1, rates in fs^-1.
struct FMOParams {
    int n_sites = 7;
    std::vector<double> site_energies;
    Eigen::MatrixXd couplings;  // symmetric, zero diagonal
    double gamma_deph = 0.0;
    double gamma_diss = 0.0;
    double gamma_sink = 0.0;

    /// Site energies and couplings of the 7-site monomer (Adolphs-Renger
    /// values, as tabulated by Plenio and Huelga 2008, relative to
    /// 12210 cm^-1), truncated to the first `n_sites` sites, with stand-in
    /// rates documented in data/README.md.
    static FMOParams defaults(int n_sites);
};

/// Levels: ground = 0, sites 1..n, sink = n + 1. Channels: dephasing |i><i|,
/// dissipation |0><i| for every site, and |sink><3|. Starts in |1><1|.
std::pair<LindbladModel, DensityMatrix> fmo_model(const FMOParams& params);

// ---------------------------------------------------------------------------
// Radical-pair compass

/// One nuclear spin coupled to electron 1; SI units (rad/s, tesla, s^-1).
struct RPMParams {
    Eigen::Matrix3d hyperfine = Eigen::Matrix3d::Zero();
    double b0 = 47e-6;
    double theta = 1.5707963267948966;
    double phi = 0.0;
    double gyromagnetic = 1.76085963023e11;
    double gamma_shelf = 1e4;
    double gamma_diss = 0.0;

    /// Axial hyperfine diag(0, 0, az) with the default az.
    static RPMParams defaults();
    static constexpr double kDefaultHyperfineAz = 3.0e7;
};

inline constexpr Index kRpmSpinLevels = 8;
inline constexpr Index kRpmSingletShelf = 8;
inline constexpr Index kRpmTripletShelf = 9;

/// Ten levels: spin states nucleus (x) e1 (x) e2 (up = |0>) at 0..7, then the
/// shelves S = 8 and T = 9. Time unit ms. Starts in (I/2) (x) |s><s|.
std::pair<LindbladModel, DensityMatrix> rpm_model(const RPMParams& params,
                                                   bool include_dissipators);

struct Yields {
    std::vector<double> phi_s;
    std::vector<double> phi_t;
};

/// Shelf populations per time. Throws WrongModel unless the trace has the
/// radical-pair level layout.
Yields yields(const PopulationTrace& trace);

/// theta_j = j * 0.9 deg for j = 0..200, in radians.
std::vector<double> default_theta_grid();

struct ThetaSweep {
    std::vector<double> thetas;
    std::vector<double> phi_s;
    std::vector<double> phi_t;
    std::vector<double> success_prob;
    std::vector<double> scales;
};

/// Yields at t_end for every angle. Dissipators are included when
/// base.gamma_diss > 0. Classical mode runs the Liouville-space oracle;
/// sampled mode uses substream (seed ^ angle index).
ThetaSweep theta_sweep(const RPMParams& base, std::span<const double> thetas, double t_end,
                       TraceMode mode, std::uint64_t shots = kDefaultShots,
                       std::uint64_t seed = 0, std::size_t workers = worker_count());

// ---------------------------------------------------------------------------
// Bundled models and parameter records

nlohmann::json to_json(const FMOParams& params);
nlohmann::json to_json(const RPMParams& params);

/// Names of the bundled models: fmo3, fmo7, rpm, rpm-dissipative.
std::span<const std::string_view> builtin_model_names();

/// Throws InvalidParameter for unknown names.
ModelFile builtin_model(std::string_view name);

/// Stand-in gamma_diss values (s^-1) for the no / mid / high dissipation
/// theta sweeps.
inline constexpr double kRpmDissipationLevels[3] = {0.0, 1e3, 1e4};

}  // namespace lsvd
