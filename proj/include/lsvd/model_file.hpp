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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lsvd/lindblad.hpp"

namespace lsvd {

/// A model as stored on disk:
///
///   { "dim": r, "time_unit": "fs",
///     "hamiltonian": [[[re, im], ...], ...],
///     "channels": [{"operator": [[[re, im], ...]], "rate": g, "label": "..."}],
///     "labels": ["...", ...],
///     "name": "...", "initial_state": [[[re, im], ...]],     (optional)
///     "parameters": {...}, "notes": ["...", ...] }           (optional)
///
/// Matrices are row-major nested arrays of interleaved (re, im) pairs; a bare
/// number is accepted as a real entry.
struct ModelFile {
    LindbladModel model;
    std::optional<ComplexMatrix> initial_state;
    nlohmann::json parameters = nlohmann::json::object();
};

/// Parses without checking physical invariants (see check_model). Throws
/// InvalidModel for structurally malformed input.
ModelFile parse_model(std::string_view text);
ModelFile model_from_json(const nlohmann::json& doc);

/// Reads and parses a model file; Io for unreadable paths.
ModelFile load_model_file(const std::filesystem::path& path);

nlohmann::json model_to_json(const ModelFile& file);
/// Indented JSON text with one line per matrix row.
std::string format_model(const ModelFile& file);
void save_model_file(const std::filesystem::path& path, const ModelFile& file);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& rows, std::string_view what);

}  // namespace lsvd
