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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsvd/error.hpp"
#include "lsvd/model_file.hpp"
#include "lsvd/models.hpp"

namespace lsvd::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

int exit_code(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Config: return kExitConfig;
        case ErrorCategory::Numeric: return kExitNumeric;
        case ErrorCategory::Io: return kExitIo;
    }
    return kExitNumeric;
}

[[noreturn]] void config_error(const std::string& message) {
    throw Error(ErrorCode::InvalidParameter, message);
}

struct Prepared {
    LindbladModel model;
    DensityMatrix rho0;
    json parameters;
};

struct Outcome {
    ResultTable table;
    json metadata;
};

ModelFile resolve_model(const std::string& source) {
    for (auto name : builtin_model_names()) {
        if (source == name) return builtin_model(name);
    }
    return load_model_file(source);
}

Prepared from_file(ModelFile file) {
    if (!file.initial_state) {
        config_error("model '" + file.model.name + "' has no initial_state");
    }
    return {std::move(file.model), DensityMatrix(*file.initial_state, Validation::Strict),
            std::move(file.parameters)};
}

json layout_json(const QubitLayout& layout) {
    return {{"levels", layout.levels},   {"liouville_dim", layout.liouville_dim},
            {"padded_dim", layout.padded_dim}, {"k", layout.k},
            {"d", layout.d}};
}

json resources_json(int d) {
    const ResourceEstimate r = estimate_resources(d);
    return {{"d", r.d},
            {"diagonal_gates", r.diagonal_gates},
            {"unitary_gates_each", r.unitary_gates_each},
            {"total", r.total},
            {"note", "order-of-magnitude counts: asymptotic complexity formulas evaluated literally"}};
}

json base_metadata(const RunConfig& c, const LindbladModel& model, const json& parameters) {
    const QubitLayout layout = qubit_layout(model.dim());
    json channels = json::array();
    for (const auto& channel : model.channels) {
        channels.push_back({{"label", channel.label}, {"rate", channel.rate}});
    }
    json meta;
    meta["tool"] = "lsvd";
    meta["version"] = kVersion;
    meta["command"] = c.command;
    meta["mode"] = std::string(to_string(c.mode));
    meta["model"] = {{"name", model.name},
                     {"time_unit", model.time_unit},
                     {"dim", model.dim()},
                     {"labels", model.labels},
                     {"channels", std::move(channels)},
                     {"parameters", parameters},
                     {"notes", model.notes}};
    meta["qubits"] = layout_json(layout);
    meta["resources"] = resources_json(layout.d);
    meta["tolerances"] = {{"expm", kDefaultTol}, {"svd", kDefaultTol}};
    meta["seed"] = c.seed;
    if (c.mode == TraceMode::Sampled) {
        meta["shots"] = c.shots;
        meta["rng"] = {{"algorithm", std::string(kRngAlgorithm)},
                       {"multinomial", std::string(kMultinomialMethod)},
                       {"substream", "seed XOR work-item index"}};
    }
    meta["dilation_scaling"] =
        "singular values divided by s = max(1, sigma_max) per time point; exact mode multiplies s back";
    return meta;
}

std::pair<double, double> resolve_grid(const RunConfig& c, const std::string& time_unit) {
    double dt = 0.0;
    double t_end = 0.0;
    if (time_unit == "fs") {
        dt = 5.0;
        t_end = 2000.0;
    } else if (time_unit == "ms") {
        dt = 1.75e-3;
        t_end = 1.0;
    }
    if (c.dt) dt = *c.dt;
    if (c.t_end) t_end = *c.t_end;
    if (!(dt > 0.0)) config_error("--dt must be positive (no default for time unit '" + time_unit + "')");
    if (!(t_end >= dt)) config_error("--t-end must be >= --dt");
    return {dt, t_end};
}

Outcome run_trace(const RunConfig& c, const Prepared& prepared) {
    const auto [dt, t_end] = resolve_grid(c, prepared.model.time_unit);
    const std::vector<double> times = time_grid(dt, t_end);

    PopulationTrace trace;
    if (c.mode == TraceMode::Classical) {
        trace = classical_evolve(prepared.model, prepared.rho0, times);
    } else {
        QuantumRunOptions options;
        options.mode = c.mode;
        options.shots = c.shots;
        options.seed = c.seed;
        trace = quantum_evolve(prepared.model, prepared.rho0, times, options).trace;
    }

    Outcome outcome;
    outcome.table.columns.push_back("time");
    for (const auto& label : prepared.model.labels) outcome.table.columns.push_back(label);
    outcome.table.columns.push_back("success_prob");
    for (std::size_t i = 0; i < trace.size(); ++i) {
        std::vector<double> row{trace.times[i]};
        row.insert(row.end(), trace.populations[i].begin(), trace.populations[i].end());
        row.push_back(trace.success_prob[i]);
        outcome.table.rows.push_back(std::move(row));
    }
    outcome.metadata = base_metadata(c, prepared.model, prepared.parameters);
    outcome.metadata["time_grid"] = {{"dt", dt}, {"t_end", t_end}, {"points", times.size()}};
    outcome.metadata["scale_factors"] = trace.scales;
    return outcome;
}

FMOParams fmo_params(const RunConfig& c) {
    if (c.sites != 3 && c.sites != 7) config_error("--sites must be 3 or 7");
    FMOParams p = FMOParams::defaults(c.sites);
    if (c.gamma_deph) p.gamma_deph = *c.gamma_deph;
    if (c.gamma_diss) p.gamma_diss = *c.gamma_diss;
    if (c.gamma_sink) p.gamma_sink = *c.gamma_sink;
    return p;
}

RPMParams rpm_params(const RunConfig& c) {
    RPMParams p = RPMParams::defaults();
    if (c.theta) p.theta = *c.theta;
    if (c.b0) p.b0 = *c.b0;
    if (c.hyperfine_az) p.hyperfine(2, 2) = *c.hyperfine_az;
    if (c.gamma_shelf) p.gamma_shelf = *c.gamma_shelf;
    if (c.gamma_diss) p.gamma_diss = *c.gamma_diss;
    return p;
}

Outcome run_sweep(const RunConfig& c) {
    const RPMParams base = rpm_params(c);
    const double t_end = c.t_end.value_or(1.0);
    if (!(t_end > 0.0)) config_error("--t-end must be positive");
    const std::vector<double> thetas = default_theta_grid();
    const ThetaSweep sweep = theta_sweep(base, thetas, t_end, c.mode, c.shots, c.seed);

    Outcome outcome;
    outcome.table.columns = {"theta", "theta_deg", "phi_S", "phi_T", "success_prob"};
    for (std::size_t j = 0; j < thetas.size(); ++j) {
        outcome.table.rows.push_back({sweep.thetas[j], sweep.thetas[j] * 180.0 / units::kPi,
                                      sweep.phi_s[j], sweep.phi_t[j], sweep.success_prob[j]});
    }
    const auto [model, rho0] = rpm_model(base, base.gamma_diss > 0.0);
    json parameters = to_json(base);
    parameters.erase("theta_rad");
    outcome.metadata = base_metadata(c, model, parameters);
    outcome.metadata["sweep"] = {{"t_end", t_end},
                                 {"theta_step_deg", 0.9},
                                 {"points", thetas.size()},
                                 {"yields_at", "t_end"}};
    outcome.metadata["scale_factors"] = sweep.scales;
    return outcome;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    file << text;
    if (!file) throw Error(ErrorCode::Io, "failed writing " + path);
}

json table_json(const ResultTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    return {{"columns", table.columns}, {"rows", std::move(rows)}};
}

void emit(const RunConfig& c, const Outcome& outcome, std::ostream& out, std::ostream& err) {
    std::string body;
    if (c.format == Format::Json) {
        json doc = table_json(outcome.table);
        doc["metadata"] = outcome.metadata;
        body = doc.dump(1) + "\n";
    } else {
        body = to_csv(outcome.table);
    }
    if (c.out.empty()) {
        out << body;
    } else {
        write_text(c.out, body);
    }
    if (c.format == Format::Csv) {
        const std::string meta = outcome.metadata.dump(1) + "\n";
        if (!c.meta.empty()) {
            write_text(c.meta, meta);
        } else if (!c.out.empty()) {
            write_text(c.out + ".meta.json", meta);
        } else {
            err << meta;
        }
    }
}

void check_config(const RunConfig& c) {
    if (c.dt && !(*c.dt > 0.0)) config_error("--dt must be positive");
    if (c.t_end && !(*c.t_end >= 0.0)) config_error("--t-end must be non-negative");
    if (c.dt && c.t_end && *c.t_end < *c.dt) config_error("--t-end must be >= --dt");
    if (c.shots < 1) config_error("--shots must be >= 1");
    for (const auto& [name, value] :
         {std::pair{"--gamma-deph", c.gamma_deph}, std::pair{"--gamma-diss", c.gamma_diss},
          std::pair{"--gamma-sink", c.gamma_sink}, std::pair{"--gamma-shelf", c.gamma_shelf},
          std::pair{"--b0", c.b0}}) {
        if (value && !(*value >= 0.0)) config_error(std::string(name) + " must be non-negative");
    }
    if (c.theta && !(*c.theta >= 0.0 && *c.theta <= units::kPi)) {
        config_error("--theta must lie in [0, pi] radians");
    }
}

int run_resources(const RunConfig& c, std::ostream& out) {
    int d = c.qubits;
    if (d == 0) {
        if (c.model_source.empty()) config_error("resources needs --qubits or --model");
        d = qubit_layout(resolve_model(c.model_source).model.dim()).d;
    }
    const std::string body = resources_json(d).dump(1) + "\n";
    if (c.out.empty()) {
        out << body;
    } else {
        write_text(c.out, body);
    }
    return kExitOk;
}

int run_export(const RunConfig& c, std::ostream& out) {
    if (c.model_source.empty()) config_error("export needs a built-in model name");
    const std::string body = format_model(builtin_model(c.model_source));
    if (c.out.empty()) {
        out << body;
    } else {
        write_text(c.out, body);
    }
    return kExitOk;
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string to_csv(const ResultTable& table) {
    std::string text;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) text += ',';
        text += table.columns[i];
    }
    text += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += format_number(row[i]);
        }
        text += '\n';
    }
    return text;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        check_config(c);
        if (c.command == "resources") return run_resources(c, out);
        if (c.command == "export") return run_export(c, out);
        if (c.command == "validate") return validate(c.model_source, out, err);

        Outcome outcome;
        if (c.command == "fmo") {
            const FMOParams params = fmo_params(c);
            auto [model, rho0] = fmo_model(params);
            outcome = run_trace(c, {std::move(model), std::move(rho0), to_json(params)});
        } else if (c.command == "sweep" || (c.command == "rpm" && c.sweep_theta)) {
            outcome = run_sweep(c);
        } else if (c.command == "rpm") {
            const RPMParams params = rpm_params(c);
            auto [model, rho0] = rpm_model(params, params.gamma_diss > 0.0);
            outcome = run_trace(c, {std::move(model), std::move(rho0), to_json(params)});
        } else if (c.command == "evolve") {
            if (c.model_source.empty()) config_error("evolve needs --model");
            outcome = run_trace(c, from_file(resolve_model(c.model_source)));
            outcome.metadata["model"]["source"] = c.model_source;
        } else {
            config_error("unknown command '" + c.command + "'");
        }
        emit(c, outcome, out, err);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.category());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int validate(const std::string& source, std::ostream& out, std::ostream& err) {
    ModelFile file;
    try {
        file = resolve_model(source);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.category());
    }
    bool ok = true;
    for (const auto& check : check_model(file.model)) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) out << ": " << check.detail;
        out << '\n';
        ok = ok && check.passed;
    }
    if (file.initial_state) {
        const DensityCheck dc = check_density(*file.initial_state);
        const bool passed = file.initial_state->rows() == file.model.dim() && dc.ok();
        out << (passed ? "PASS " : "FAIL ") << "initial_state_physical: hermiticity "
            << dc.hermiticity << ", trace error " << dc.trace_error << ", min eigenvalue "
            << dc.min_eigenvalue << '\n';
        ok = ok && passed;
    }
    return ok ? kExitOk : kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Open-system dynamics by dilated-SVD circuits (FMO and radical-pair models)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig c;
    std::string mode = "exact";
    std::string format = "csv";
    double dt = 0.0;
    double t_end = 0.0;

    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--dt", dt, "Time step in model time units");
        sub->add_option("--t-end", t_end, "End time in model time units");
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "exact, sampled or classical")
            ->check(CLI::IsMember({"exact", "sampled", "classical"}));
        sub->add_option("--shots", c.shots, "Shots per time point (sampled mode)");
        sub->add_option("--seed", c.seed, "RNG seed (sampled mode)");
        sub->add_option("--out", c.out, "Results path (default stdout)");
        sub->add_option("--meta", c.meta, "Metadata path for csv output (default <out>.meta.json)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* fmo = app.add_subcommand("fmo", "FMO exciton transport (3 or 7 sites)");
    fmo->add_option("--sites", c.sites, "Number of chromophore sites")->check(CLI::IsMember({3, 7}));
    fmo->add_option("--gamma-deph", c.gamma_deph, "Dephasing rate (fs^-1)");
    fmo->add_option("--gamma-diss", c.gamma_diss, "Dissipation rate (fs^-1)");
    fmo->add_option("--gamma-sink", c.gamma_sink, "Sink transfer rate (fs^-1)");
    add_grid(fmo);
    add_run(fmo);

    auto add_rpm = [&](CLI::App* sub) {
        sub->add_option("--gamma-shelf", c.gamma_shelf, "Shelving rate (s^-1)");
        sub->add_option("--gamma-diss", c.gamma_diss, "Electron dissipation rate (s^-1)");
        sub->add_option("--b0", c.b0, "Field magnitude (T)");
        sub->add_option("--hyperfine-az", c.hyperfine_az, "Axial hyperfine coupling (rad/s)");
    };
    auto* rpm = app.add_subcommand("rpm", "Radical-pair compass yields");
    rpm->add_option("--theta", c.theta, "Field angle (radians)");
    rpm->add_flag("--sweep-theta", c.sweep_theta, "Sweep theta over 0..180 deg in 0.9 deg steps");
    add_rpm(rpm);
    add_grid(rpm);
    add_run(rpm);

    auto* sweep = app.add_subcommand("sweep", "Radical-pair theta sweep (same as rpm --sweep-theta)");
    add_rpm(sweep);
    sweep->add_option("--t-end", t_end, "Yield time (ms)");
    add_run(sweep);

    auto* evolve = app.add_subcommand("evolve", "Evolve a model file or built-in model");
    evolve->add_option("--model", c.model_source, "Model file or fmo3|fmo7|rpm|rpm-dissipative")
        ->required();
    add_grid(evolve);
    add_run(evolve);

    auto* resources = app.add_subcommand("resources", "Gate-count estimates");
    resources->add_option("--qubits", c.qubits, "Total qubits d");
    resources->add_option("--model", c.model_source, "Derive d from a model");
    resources->add_option("--out", c.out, "Output path (default stdout)");

    auto* validate_cmd = app.add_subcommand("validate", "Check model invariants");
    validate_cmd->add_option("model", c.model_source, "Model file or built-in name")->required();

    auto* export_cmd = app.add_subcommand("export", "Write a built-in model file");
    export_cmd->add_option("name", c.model_source, "fmo3|fmo7|rpm|rpm-dissipative")->required();
    export_cmd->add_option("--out", c.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    c.command = chosen->get_name();
    auto given = [chosen](const char* name) {
        const CLI::Option* opt = chosen->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--dt")) c.dt = dt;
    if (given("--t-end")) c.t_end = t_end;
    c.mode = mode == "sampled" ? TraceMode::Sampled
             : mode == "classical" ? TraceMode::Classical
                                   : TraceMode::Exact;
    c.format = format == "json" ? Format::Json : Format::Csv;
    return run(c, out, err);
}

}  // namespace lsvd::cli
