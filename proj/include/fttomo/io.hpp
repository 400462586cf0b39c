// Copyright 2026 The fttomo Authors
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
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fttomo/quantum_core.hpp"
#include "fttomo/signal_synth.hpp"

namespace fttomo::io {

using nlohmann::json;

/// Maximum |m - m^dagger| accepted when reading a state file.
inline constexpr double kReadHermitianTolerance = 1e-9;

/// {"n_qubits": n, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const ComplexMatrix& m);
/// Parses the matrix layout without physicality checks.
ComplexMatrix matrix_from_json(const json& j);
/// Rejects non-Hermitian input beyond kReadHermitianTolerance.
DensityMatrix density_from_json(const json& j);

/// {"base_omega", "plates": [{"beta", "frequency", "phase0"}], "bins_per_period",
///  "shots_per_bin", "seed"}. "beta" may be a number or a pi expression
/// string such as "11pi/15"; bins/shots/seed default to 16/0/0.
json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const json& j);

/// CSV: "t,<outcome labels>" then one row per bin; probabilities with 17
/// significant digits, counts as integers.
void write_signal_csv(std::ostream& os, const SignalRecord& rec);

/// Sidecar JSON: {"config", "period", "kind", "outcomes", "manifest"}.
json signal_sidecar(const SignalRecord& rec, const json& manifest);

/// Rebuilds a record from its CSV body and sidecar.
SignalRecord read_signal(std::istream& csv, const json& sidecar);

/// `<stem>.json` next to a CSV file.
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Writes `<csv>` and its sidecar.
void save_signal(const std::filesystem::path& csv, const SignalRecord& rec, const json& manifest);
SignalRecord load_signal(const std::filesystem::path& csv);

/// FNV-1a 64-bit of the compact dump, as 16 hex digits.
std::string content_hash(const json& j);

} // namespace fttomo::io
