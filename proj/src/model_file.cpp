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

#include "lsvd/model_file.hpp"

#include <fstream>
#include <sstream>

#include "lsvd/error.hpp"

namespace lsvd {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(std::string_view what, std::string_view why) {
    throw Error(ErrorCode::InvalidModel, std::string(what) + ": " + std::string(why));
}

Complex entry_from_json(const json& value, std::string_view what) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    malformed(what, "entries must be [re, im] pairs or numbers");
}

bool is_matrix_row(const json& row) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& entry : row) {
        const bool pair = entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                          entry[1].is_number();
        if (!entry.is_number() && !pair) return false;
    }
    return true;
}

// Indented JSON with every matrix row kept on a single line.
void write_readable(std::ostream& out, const json& value, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(static_cast<std::size_t>(depth), ' ');
    if (value.is_object() && !value.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = value.begin(); it != value.end(); ++it, ++i) {
            out << pad << json(it.key()).dump() << ": ";
            write_readable(out, it.value(), depth + 1);
            out << (i + 1 < value.size() ? ",\n" : "\n");
        }
        out << close << '}';
    } else if (value.is_array() && !value.empty() && !is_matrix_row(value)) {
        out << "[\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
            out << pad;
            write_readable(out, value[i], depth + 1);
            out << (i + 1 < value.size() ? ",\n" : "\n");
        }
        out << close << ']';
    } else {
        out << value.dump();
    }
}

}  // namespace

std::string format_model(const ModelFile& file) {
    std::ostringstream out;
    write_readable(out, model_to_json(file), 0);
    out << '\n';
    return out.str();
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& rows, std::string_view what) {
    if (!rows.is_array() || rows.empty()) malformed(what, "expected a non-empty array of rows");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    if (cols == 0) malformed(what, "rows must be non-empty arrays");
    ComplexMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols) malformed(what, "ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = entry_from_json(rows[i][j], what);
        }
    }
    require_finite(m, what);
    return m;
}

ModelFile model_from_json(const json& doc) {
    if (!doc.is_object()) malformed("model", "top level must be an object");
    for (const char* key : {"dim", "hamiltonian"}) {
        if (!doc.contains(key)) malformed("model", std::string("missing key '") + key + "'");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0) {
        malformed("dim", "must be a positive integer");
    }
    const auto r = static_cast<Index>(doc["dim"].get<long long>());

    ModelFile file;
    LindbladModel& model = file.model;
    model.name = doc.value("name", std::string("custom"));
    model.time_unit = doc.value("time_unit", std::string("arb"));
    model.hamiltonian = matrix_from_json(doc["hamiltonian"], "hamiltonian");
    if (model.hamiltonian.rows() != r || model.hamiltonian.cols() != r) {
        malformed("hamiltonian", "shape does not match dim");
    }

    if (doc.contains("channels")) {
        if (!doc["channels"].is_array()) malformed("channels", "must be an array");
        std::size_t index = 0;
        for (const auto& entry : doc["channels"]) {
            const std::string what = "channels[" + std::to_string(index++) + "]";
            if (!entry.is_object() || !entry.contains("operator") || !entry.contains("rate") ||
                !entry["rate"].is_number()) {
                malformed(what, "needs 'operator' and numeric 'rate'");
            }
            Channel channel;
            channel.op = matrix_from_json(entry["operator"], what);
            if (channel.op.rows() != r || channel.op.cols() != r) {
                malformed(what, "operator shape does not match dim");
            }
            channel.rate = entry["rate"].get<double>();
            channel.label = entry.value("label", std::string());
            model.channels.push_back(std::move(channel));
        }
    }

    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) malformed("labels", "must be an array of strings");
        for (const auto& label : doc["labels"]) {
            if (!label.is_string()) malformed("labels", "must be an array of strings");
            model.labels.push_back(label.get<std::string>());
        }
        if (static_cast<Index>(model.labels.size()) != r) malformed("labels", "count must equal dim");
    } else {
        for (Index i = 0; i < r; ++i) model.labels.push_back(std::to_string(i));
    }

    if (doc.contains("notes")) {
        for (const auto& note : doc["notes"]) {
            if (note.is_string()) model.notes.push_back(note.get<std::string>());
        }
    }
    if (doc.contains("initial_state")) {
        file.initial_state = matrix_from_json(doc["initial_state"], "initial_state");
        if (file.initial_state->rows() != r || file.initial_state->cols() != r) {
            malformed("initial_state", "shape does not match dim");
        }
    }
    if (doc.contains("parameters")) file.parameters = doc["parameters"];
    return file;
}

ModelFile parse_model(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed("model", e.what());
    }
    return model_from_json(doc);
}

ModelFile load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open model file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "failed reading " + path.string());
    return parse_model(buffer.str());
}

json model_to_json(const ModelFile& file) {
    const LindbladModel& model = file.model;
    json doc;
    doc["name"] = model.name;
    doc["dim"] = model.dim();
    doc["time_unit"] = model.time_unit;
    doc["labels"] = model.labels;
    doc["hamiltonian"] = matrix_to_json(model.hamiltonian);
    json channels = json::array();
    for (const auto& channel : model.channels) {
        channels.push_back(
            {{"label", channel.label}, {"rate", channel.rate}, {"operator", matrix_to_json(channel.op)}});
    }
    doc["channels"] = std::move(channels);
    if (file.initial_state) doc["initial_state"] = matrix_to_json(*file.initial_state);
    if (!model.notes.empty()) doc["notes"] = model.notes;
    if (!file.parameters.empty()) doc["parameters"] = file.parameters;
    return doc;
}

void save_model_file(const std::filesystem::path& path, const ModelFile& file) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write model file " + path.string());
    out << format_model(file);
    if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

}  // namespace lsvd
