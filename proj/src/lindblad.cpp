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

#include "lsvd/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "lsvd/error.hpp"
#include "lsvd/parallel.hpp"

namespace lsvd {

std::string_view to_string(TraceMode mode) noexcept {
    switch (mode) {
        case TraceMode::Classical: return "classical";
        case TraceMode::Exact: return "exact";
        case TraceMode::Sampled: return "sampled";
    }
    return "unknown";
}

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTracePreservationTol = 1e-10;
constexpr double kTraceTol = 1e-8;

Superoperator assemble_superoperator(const LindbladModel& model);

std::string describe(double value) {
    std::ostringstream out;
    out.precision(3);
    out << value;
    return out.str();
}

}  // namespace

std::vector<ModelCheck> check_model(const LindbladModel& model) {
    std::vector<ModelCheck> checks;
    const Index r = model.dim();

    ModelCheck shape{"dimensions", true, ""};
    if (r == 0 || model.hamiltonian.cols() != r) {
        shape.passed = false;
        shape.detail = "hamiltonian must be a non-empty square matrix";
    } else if (!model.labels.empty() && static_cast<Index>(model.labels.size()) != r) {
        shape.passed = false;
        shape.detail = "expected " + std::to_string(r) + " labels, got " +
                       std::to_string(model.labels.size());
    }
    for (std::size_t i = 0; i < model.channels.size() && shape.passed; ++i) {
        const auto& op = model.channels[i].op;
        if (op.rows() != r || op.cols() != r) {
            shape.passed = false;
            shape.detail = "channel " + std::to_string(i) + " operator is " +
                           std::to_string(op.rows()) + "x" + std::to_string(op.cols());
        }
    }
    checks.push_back(shape);

    ModelCheck finite{"finite_entries", model.hamiltonian.allFinite(), ""};
    for (std::size_t i = 0; i < model.channels.size(); ++i) {
        if (!model.channels[i].op.allFinite() || !std::isfinite(model.channels[i].rate)) {
            finite.passed = false;
            finite.detail = "channel " + std::to_string(i) + " has non-finite entries";
            break;
        }
    }
    if (!model.hamiltonian.allFinite()) finite.detail = "hamiltonian has non-finite entries";
    checks.push_back(finite);

    ModelCheck herm{"hamiltonian_hermitian", false, ""};
    if (shape.passed && finite.passed) {
        const double err = hermiticity_error(model.hamiltonian);
        const double scale = std::max(1.0, model.hamiltonian.norm());
        herm.passed = err <= kHermitianTol * scale;
        herm.detail = "||H - H^dagger||_F = " + describe(err);
    } else {
        herm.detail = "skipped: malformed model";
    }
    checks.push_back(herm);

    ModelCheck rates{"rates_nonnegative", true, ""};
    for (std::size_t i = 0; i < model.channels.size(); ++i) {
        if (!(model.channels[i].rate >= 0.0)) {
            rates.passed = false;
            const auto& label = model.channels[i].label;
            rates.detail = "channel " + std::to_string(i) + (label.empty() ? "" : " (" + label + ")") +
                           " has rate " + describe(model.channels[i].rate);
            break;
        }
    }
    checks.push_back(rates);

    ModelCheck trace{"superoperator_trace_preserving", false, ""};
    if (shape.passed && finite.passed) {
        const double err = trace_preservation_error(assemble_superoperator(model));
        trace.passed = err <= kTracePreservationTol;
        trace.detail = "||vec(I)^dagger L|| / ||L|| = " + describe(err);
    } else {
        trace.detail = "skipped: malformed model";
    }
    checks.push_back(trace);
    return checks;
}

void validate_model(const LindbladModel& model) {
    for (const auto& check : check_model(model)) {
        if (check.passed) continue;
        const ErrorCode code = check.name == "hamiltonian_hermitian" ? ErrorCode::NotHermitian
                               : check.name == "dimensions"          ? ErrorCode::DimensionMismatch
                                                                     : ErrorCode::InvalidModel;
        throw Error(code, "model '" + model.name + "' failed " + check.name + ": " + check.detail);
    }
}

DensityCheck check_density(const ComplexMatrix& rho) {
    DensityCheck check;
    check.hermiticity = hermiticity_error(rho);
    check.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
    const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = solver.eigenvalues().minCoeff();
    return check;
}

DensityMatrix::DensityMatrix(ComplexMatrix entries, Validation validation)
    : entries_(std::move(entries)) {
    require_square(entries_, "density matrix");
    require_finite(entries_, "density matrix");
    if (validation == Validation::None) return;
    const DensityCheck check = check_density(entries_);
    if (check.ok()) return;
    std::ostringstream msg;
    msg << "density matrix invariants violated: hermiticity " << check.hermiticity
        << ", trace error " << check.trace_error << ", min eigenvalue " << check.min_eigenvalue;
    if (validation == Validation::Strict) throw Error(ErrorCode::InvalidModel, msg.str());
    std::clog << "warning: " << msg.str() << '\n';
}

std::vector<double> DensityMatrix::populations() const {
    std::vector<double> out(static_cast<std::size_t>(dim()));
    for (Index i = 0; i < dim(); ++i) out[static_cast<std::size_t>(i)] = entries_(i, i).real();
    return out;
}

ComplexVector vectorize(const ComplexMatrix& rho) {
    const Index r = rho.rows();
    ComplexVector v(r * rho.cols());
    for (Index j = 0; j < rho.cols(); ++j) v.segment(j * r, r) = rho.col(j);
    return v;
}

ComplexVector vectorize(const DensityMatrix& rho) { return vectorize(rho.entries()); }

ComplexMatrix devectorize_matrix(const ComplexVector& v, Index r) {
    if (r <= 0 || v.size() != r * r) {
        std::ostringstream msg;
        msg << "vector of length " << v.size() << " cannot be reshaped to " << r << "x" << r;
        throw Error(ErrorCode::LengthMismatch, msg.str());
    }
    ComplexMatrix rho(r, r);
    for (Index j = 0; j < r; ++j) rho.col(j) = v.segment(j * r, r);
    return rho;
}

DensityMatrix devectorize(const ComplexVector& v, Index r, Validation validation) {
    return DensityMatrix(devectorize_matrix(v, r), validation);
}

Superoperator build_superoperator(const LindbladModel& model) {
    validate_model(model);
    return assemble_superoperator(model);
}

namespace {

Superoperator assemble_superoperator(const LindbladModel& model) {
    const Index r = model.dim();
    const ComplexMatrix id = ComplexMatrix::Identity(r, r);
    const ComplexMatrix& h = model.hamiltonian;

    Superoperator out;
    out.matrix = -kI * kron(id, h) + kI * kron(h.transpose(), id);
    for (const auto& channel : model.channels) {
        if (channel.rate == 0.0) continue;
        const ComplexMatrix& c = channel.op;
        const ComplexMatrix cdag_c = c.adjoint() * c;
        out.matrix += channel.rate * (kron(c.conjugate(), c) - 0.5 * kron(id, cdag_c) -
                                      0.5 * kron(c.transpose() * c.conjugate(), id));
    }
    return out;
}

}  // namespace

double trace_preservation_error(const Superoperator& superop) {
    const Index d = superop.dim();
    const Index r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(d))));
    if (r * r != d) {
        throw Error(ErrorCode::DimensionMismatch, "superoperator dimension is not a square");
    }
    const double norm = superop.matrix.norm();
    if (norm == 0.0) return 0.0;
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(d);
    for (Index i = 0; i < r; ++i) row += superop.matrix.row(i * r + i);
    return row.norm() / norm;
}

ComplexMatrix propagator(const Superoperator& superop, double t, double tol) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::InvalidParameter, "propagation time must be finite and >= 0");
    }
    if (t == 0.0) return ComplexMatrix::Identity(superop.dim(), superop.dim());
    return expm(superop.matrix * t, tol);
}

void require_time_grid(std::span<const double> times) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
            throw Error(ErrorCode::InvalidParameter, "times must be finite and >= 0");
        }
        if (i > 0 && times[i] < times[i - 1]) {
            throw Error(ErrorCode::InvalidParameter, "times must be sorted ascending");
        }
    }
}

PopulationTrace classical_evolve(const LindbladModel& model, const DensityMatrix& rho0,
                                 std::span<const double> times, const EvolveOptions& options) {
    require_time_grid(times);
    if (rho0.dim() != model.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "initial state does not match model dimension");
    }
    const Superoperator superop = build_superoperator(model);
    const ComplexVector v0 = vectorize(rho0);
    const Index r = model.dim();
    const std::size_t count = times.size();

    PopulationTrace trace;
    trace.mode = TraceMode::Classical;
    trace.times.assign(times.begin(), times.end());
    trace.labels = model.labels;
    trace.populations.assign(count, std::vector<double>(static_cast<std::size_t>(r)));
    trace.success_prob.assign(count, 1.0);
    trace.scales.assign(count, 1.0);
    std::vector<ComplexMatrix> states(count);

    parallel_for(count, [&](std::size_t i) {
        const ComplexVector v = propagator(superop, times[i], options.tol) * v0;
        ComplexMatrix rho = devectorize_matrix(v, r);
        const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
        if (trace_err > kTraceTol) {
            std::ostringstream msg;
            msg << "trace drifted by " << trace_err << " at t = " << times[i];
            throw Error(ErrorCode::ToleranceUnachievable, msg.str());
        }
        for (Index l = 0; l < r; ++l) trace.populations[i][static_cast<std::size_t>(l)] = rho(l, l).real();
        if (options.record_states) states[i] = std::move(rho);
    });
    if (options.record_states) trace.states = std::move(states);
    return trace;
}

}  // namespace lsvd
