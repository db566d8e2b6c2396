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

#include "lsvd/models.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "lsvd/error.hpp"

namespace lsvd {

namespace {

// 7-site FMO monomer Hamiltonian in cm^-1, offset 12210 cm^-1 removed.
constexpr std::array<double, 7> kFmoSiteEnergies{215.0, 220.0, 0.0, 125.0, 450.0, 330.0, 280.0};
constexpr double kFmoCouplings[7][7] = {
    {0.0, -104.1, 5.1, -4.3, 4.7, -15.1, -7.8},
    {-104.1, 0.0, 32.6, 7.1, 5.4, 8.3, 0.8},
    {5.1, 32.6, 0.0, -46.8, 1.0, -8.1, 5.1},
    {-4.3, 7.1, -46.8, 0.0, -70.7, -14.7, -61.5},
    {4.7, 5.4, 1.0, -70.7, 0.0, 89.7, -2.5},
    {-15.1, 8.3, -8.1, -14.7, 89.7, 0.0, 32.7},
    {-7.8, 0.8, 5.1, -61.5, -2.5, 32.7, 0.0},
};

// Stand-in rates in fs^-1.
constexpr double kFmoGammaDeph = 1e-2;
constexpr double kFmoGammaDiss = 5e-7;
constexpr double kFmoGammaSink = 6.28e-3;

constexpr double kMsPerS = 1e-3;

ComplexMatrix projector(Index dim, Index row, Index col) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(row, col) = 1.0;
    return m;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorCode::InvalidParameter, message);
}

// Spin-1/2 operators, up = |0>.
ComplexMatrix pauli(char axis) {
    ComplexMatrix m(2, 2);
    switch (axis) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Places a one-spin operator on factor `slot` of nucleus (x) e1 (x) e2.
ComplexMatrix on_factor(const ComplexMatrix& op, int slot) {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix out = slot == 0 ? op : id;
    for (int f = 1; f < 3; ++f) out = kron(out, f == slot ? op : id);
    return out;
}

ComplexMatrix pad_spin_block(const ComplexMatrix& spin, Index dim) {
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    out.topLeftCorner(spin.rows(), spin.cols()) = spin;
    return out;
}

struct PairState {
    const char* name;
    ComplexVector vector;  // length 4, e1 (x) e2
    Index shelf;
};

std::array<PairState, 4> pair_states() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexVector s(4), t0(4), tp(4), tm(4);
    // Basis |e1 e2>: 0 = up up, 1 = up down, 2 = down up, 3 = down down.
    s << 0, h, -h, 0;
    t0 << 0, h, h, 0;
    tp << 1, 0, 0, 0;
    tm << 0, 0, 0, 1;
    return {PairState{"s", s, kRpmSingletShelf}, PairState{"t0", t0, kRpmTripletShelf},
            PairState{"t+", tp, kRpmTripletShelf}, PairState{"t-", tm, kRpmTripletShelf}};
}

}  // namespace

FMOParams FMOParams::defaults(int n_sites) {
    require(n_sites == 3 || n_sites == 7, "FMO model supports 3 or 7 sites");
    FMOParams p;
    p.n_sites = n_sites;
    p.site_energies.assign(kFmoSiteEnergies.begin(), kFmoSiteEnergies.begin() + n_sites);
    p.couplings.resize(n_sites, n_sites);
    for (int i = 0; i < n_sites; ++i) {
        for (int j = 0; j < n_sites; ++j) p.couplings(i, j) = kFmoCouplings[i][j];
    }
    p.gamma_deph = kFmoGammaDeph;
    p.gamma_diss = kFmoGammaDiss;
    p.gamma_sink = kFmoGammaSink;
    return p;
}

std::pair<LindbladModel, DensityMatrix> fmo_model(const FMOParams& p) {
    require(p.n_sites == 3 || p.n_sites == 7, "FMO model supports 3 or 7 sites");
    const int n = p.n_sites;
    require(static_cast<int>(p.site_energies.size()) == n, "need one site energy per site");
    require(p.couplings.rows() == n && p.couplings.cols() == n, "couplings must be n x n");
    require((p.couplings - p.couplings.transpose()).norm() == 0.0, "couplings must be symmetric");
    require(p.couplings.diagonal().isZero(0.0), "couplings must have a zero diagonal");
    require(p.gamma_deph >= 0.0 && p.gamma_diss >= 0.0 && p.gamma_sink >= 0.0,
            "FMO rates must be non-negative");

    const Index r = n + 2;
    const Index sink = n + 1;
    LindbladModel model;
    model.name = "fmo" + std::to_string(n);
    model.time_unit = "fs";
    model.hamiltonian = ComplexMatrix::Zero(r, r);
    for (int i = 0; i < n; ++i) {
        model.hamiltonian(i + 1, i + 1) = units::wavenumber_to_rad_per_fs(p.site_energies[i]);
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                model.hamiltonian(i + 1, j + 1) = units::wavenumber_to_rad_per_fs(p.couplings(i, j));
            }
        }
    }
    model.labels.push_back("ground");
    for (int i = 1; i <= n; ++i) model.labels.push_back("site" + std::to_string(i));
    model.labels.push_back("sink");

    for (int i = 1; i <= n; ++i) {
        model.channels.push_back(
            {projector(r, i, i), p.gamma_deph, "deph(" + std::to_string(i) + ")"});
    }
    for (int i = 1; i <= n; ++i) {
        model.channels.push_back(
            {projector(r, 0, i), p.gamma_diss, "diss(" + std::to_string(i) + ")"});
    }
    model.channels.push_back({projector(r, sink, 3), p.gamma_sink, "sink"});
    model.notes = {
        "Site energies and couplings: 7-site FMO monomer (Adolphs-Renger values as used by "
        "Plenio & Huelga, New J. Phys. 10, 113019 (2008)), relative to 12210 cm^-1.",
        "Rates gamma_deph, gamma_diss, gamma_sink are documented stand-ins in fs^-1.",
        "Energies converted with omega[rad/fs] = 2 pi c nu[cm^-1] 1e-15."};

    return {std::move(model), DensityMatrix(projector(r, 1, 1), Validation::Strict)};
}

RPMParams RPMParams::defaults() {
    RPMParams p;
    p.hyperfine(2, 2) = kDefaultHyperfineAz;
    return p;
}

std::pair<LindbladModel, DensityMatrix> rpm_model(const RPMParams& p, bool include_dissipators) {
    require(p.hyperfine.allFinite(), "hyperfine tensor must be finite");
    require(p.b0 >= 0.0, "B0 must be non-negative");
    require(p.theta >= 0.0 && p.theta <= units::kPi, "theta must lie in [0, pi]");
    require(std::isfinite(p.phi) && std::isfinite(p.gyromagnetic), "phi and gamma must be finite");
    require(p.gamma_shelf >= 0.0 && p.gamma_diss >= 0.0, "RPM rates must be non-negative");

    constexpr Index r = 10;
    const std::array<char, 3> axes{'x', 'y', 'z'};
    std::array<ComplexMatrix, 3> nucleus, e1, e2;
    for (int a = 0; a < 3; ++a) {
        nucleus[a] = on_factor(0.5 * pauli(axes[a]), 0);
        e1[a] = on_factor(0.5 * pauli(axes[a]), 1);
        e2[a] = on_factor(0.5 * pauli(axes[a]), 2);
    }
    const Eigen::Vector3d field =
        p.b0 * Eigen::Vector3d(std::cos(p.phi) * std::sin(p.theta),
                               std::sin(p.phi) * std::sin(p.theta), std::cos(p.theta));

    // rad/s -> rad/ms
    ComplexMatrix spin_h = ComplexMatrix::Zero(kRpmSpinLevels, kRpmSpinLevels);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (p.hyperfine(a, b) != 0.0) spin_h += p.hyperfine(a, b) * nucleus[a] * e1[b];
        }
        spin_h += p.gyromagnetic * field(a) * (e1[a] + e2[a]);
    }
    spin_h *= kMsPerS;

    LindbladModel model;
    model.name = include_dissipators ? "rpm-dissipative" : "rpm";
    model.time_unit = "ms";
    model.hamiltonian = pad_spin_block(spin_h, r);
    // Computational-basis labels, nucleus first: "udu" = nucleus up, e1 down, e2 up.
    for (const char* n : {"u", "d"}) {
        for (const char* a : {"u", "d"}) {
            for (const char* b : {"u", "d"}) model.labels.push_back(std::string(n) + a + b);
        }
    }
    model.labels.push_back("S");
    model.labels.push_back("T");

    const auto pairs = pair_states();
    for (Index nuc = 0; nuc < 2; ++nuc) {
        for (const auto& pair : pairs) {
            ComplexVector ket = ComplexVector::Zero(r);
            ket.head(kRpmSpinLevels) = kron(ComplexVector::Unit(2, nuc), pair.vector);
            ComplexMatrix op = ComplexMatrix::Zero(r, r);
            op.row(pair.shelf) = ket.adjoint();
            const std::string label = std::string(pair.shelf == kRpmSingletShelf ? "S" : "T") +
                                      "<-" + (nuc == 0 ? "up," : "down,") + pair.name;
            model.channels.push_back({std::move(op), p.gamma_shelf * kMsPerS, label});
        }
    }
    if (include_dissipators) {
        for (char axis : axes) {
            for (int slot : {1, 2}) {
                model.channels.push_back({pad_spin_block(on_factor(pauli(axis), slot), r),
                                          p.gamma_diss * kMsPerS,
                                          std::string("sigma_") + axis + "(e" + std::to_string(slot) + ")"});
            }
        }
    }
    model.notes = {
        "Spin ordering nucleus (x) electron1 (x) electron2, up = |0>; shelves S = 8, T = 9.",
        "Hamiltonian I.A.S1 + gamma B.(S1 + S2) with spin operators sigma/2.",
        "gamma_shelf and gamma_diss interpreted as s^-1; time unit ms.",
        "Hyperfine tensor and gamma_diss values are documented stand-ins."};

    const ComplexVector singlet = pairs[0].vector;
    ComplexMatrix rho0 = ComplexMatrix::Zero(r, r);
    rho0.topLeftCorner(kRpmSpinLevels, kRpmSpinLevels) =
        kron(0.5 * ComplexMatrix::Identity(2, 2), singlet * singlet.adjoint());
    return {std::move(model), DensityMatrix(std::move(rho0), Validation::Strict)};
}

Yields yields(const PopulationTrace& trace) {
    const bool layout_ok = trace.labels.size() == 10 && trace.labels[kRpmSingletShelf] == "S" &&
                           trace.labels[kRpmTripletShelf] == "T";
    if (!layout_ok) {
        throw Error(ErrorCode::WrongModel, "trace does not come from the radical-pair model");
    }
    Yields out;
    for (const auto& pops : trace.populations) {
        if (pops.size() != 10) throw Error(ErrorCode::WrongModel, "population row has wrong width");
        out.phi_s.push_back(pops[kRpmSingletShelf]);
        out.phi_t.push_back(pops[kRpmTripletShelf]);
    }
    return out;
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid(201);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        grid[j] = static_cast<double>(j) * units::kPi / 200.0;
    }
    grid.back() = units::kPi;
    return grid;
}

ThetaSweep theta_sweep(const RPMParams& base, std::span<const double> thetas, double t_end,
                       TraceMode mode, std::uint64_t shots, std::uint64_t seed,
                       std::size_t workers) {
    for (double theta : thetas) {
        require(theta >= 0.0 && theta <= units::kPi, "sweep angles must lie in [0, pi]");
    }
    require(t_end >= 0.0 && std::isfinite(t_end), "t_end must be non-negative");

    const std::size_t count = thetas.size();
    ThetaSweep out;
    out.thetas.assign(thetas.begin(), thetas.end());
    out.phi_s.resize(count);
    out.phi_t.resize(count);
    out.success_prob.resize(count);
    out.scales.resize(count);
    const std::array<double, 1> times{t_end};
    const bool dissipative = base.gamma_diss > 0.0;

    parallel_for(
        count,
        [&](std::size_t j) {
            RPMParams params = base;
            params.theta = thetas[j];
            const auto [model, rho0] = rpm_model(params, dissipative);
            PopulationTrace trace;
            if (mode == TraceMode::Classical) {
                trace = classical_evolve(model, rho0, times);
            } else {
                QuantumRunOptions options;
                options.mode = mode;
                options.shots = shots;
                options.seed = substream_seed(seed, j);
                options.workers = 1;
                trace = quantum_evolve(model, rho0, times, options).trace;
            }
            const Yields y = yields(trace);
            out.phi_s[j] = y.phi_s.front();
            out.phi_t[j] = y.phi_t.front();
            out.success_prob[j] = trace.success_prob.front();
            out.scales[j] = trace.scales.front();
        },
        workers);
    return out;
}

nlohmann::json to_json(const FMOParams& p) {
    nlohmann::json couplings = nlohmann::json::array();
    for (Index i = 0; i < p.couplings.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < p.couplings.cols(); ++j) row.push_back(p.couplings(i, j));
        couplings.push_back(std::move(row));
    }
    return {{"n_sites", p.n_sites},
            {"site_energies_cm-1", p.site_energies},
            {"couplings_cm-1", std::move(couplings)},
            {"gamma_deph_fs-1", p.gamma_deph},
            {"gamma_diss_fs-1", p.gamma_diss},
            {"gamma_sink_fs-1", p.gamma_sink}};
}

nlohmann::json to_json(const RPMParams& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) a.push_back({p.hyperfine(i, 0), p.hyperfine(i, 1), p.hyperfine(i, 2)});
    return {{"hyperfine_rad_s-1", std::move(a)},
            {"b0_T", p.b0},
            {"theta_rad", p.theta},
            {"phi_rad", p.phi},
            {"gyromagnetic_rad_s-1_T-1", p.gyromagnetic},
            {"gamma_shelf_s-1", p.gamma_shelf},
            {"gamma_diss_s-1", p.gamma_diss}};
}

std::span<const std::string_view> builtin_model_names() {
    static constexpr std::array<std::string_view, 4> kNames{"fmo3", "fmo7", "rpm",
                                                            "rpm-dissipative"};
    return kNames;
}

ModelFile builtin_model(std::string_view name) {
    ModelFile file;
    if (name == "fmo3" || name == "fmo7") {
        const FMOParams params = FMOParams::defaults(name == "fmo3" ? 3 : 7);
        auto [model, rho0] = fmo_model(params);
        file.model = std::move(model);
        file.initial_state = rho0.entries();
        file.parameters = to_json(params);
    } else if (name == "rpm" || name == "rpm-dissipative") {
        RPMParams params = RPMParams::defaults();
        const bool dissipative = name == "rpm-dissipative";
        if (dissipative) params.gamma_diss = kRpmDissipationLevels[1];
        auto [model, rho0] = rpm_model(params, dissipative);
        file.model = std::move(model);
        file.initial_state = rho0.entries();
        file.parameters = to_json(params);
    } else {
        throw Error(ErrorCode::InvalidParameter, "unknown built-in model '" + std::string(name) + "'");
    }
    return file;
}

}  // namespace lsvd
