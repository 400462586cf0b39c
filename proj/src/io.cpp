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

#include "fttomo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fttomo/errors.hpp"
#include "fttomo/text_format.hpp"

namespace fttomo::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) {
        if (!cell.empty() && cell.back() == '\r') {
            cell.pop_back();
        }
        out.push_back(cell);
    }
    return out;
}

double parse_beta(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_angle(j.get<std::string>());
    }
    throw ValidationError("plate \"beta\" must be a number or an angle string like \"11pi/15\"");
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"n_qubits", qubits_for_dimension(m.rows())}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    try {
        const int n = require(j, "n_qubits").get<int>();
        const int dim = register_dimension(n);
        const auto& re = require(j, "re");
        const auto& im = require(j, "im");
        if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != dim ||
            static_cast<int>(im.size()) != dim) {
            throw ValidationError("density matrix needs " + std::to_string(dim) + " rows in \"re\" and \"im\"");
        }
        ComplexMatrix m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            if (static_cast<int>(re[r].size()) != dim || static_cast<int>(im[r].size()) != dim) {
                throw ValidationError("density matrix row " + std::to_string(r) + " has the wrong length");
            }
            for (int c = 0; c < dim; ++c) {
                m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed density matrix: ") + e.what());
    }
}

DensityMatrix density_from_json(const json& j) {
    const ComplexMatrix m = matrix_from_json(j);
    const double herm = hermiticity_error(m);
    if (herm > kReadHermitianTolerance) {
        throw ValidationError("state is not Hermitian (max |rho - rho^dagger| = " +
                              format_double(herm) + ")");
    }
    return DensityMatrix(m, kReadHermitianTolerance);
}

json config_to_json(const ExperimentConfig& config) {
    json plates = json::array();
    for (const auto& p : config.plates()) {
        plates.push_back({{"beta", p.retardance}, {"frequency", p.frequency}, {"phase0", p.phase0}});
    }
    return json{{"base_omega", config.base_omega()},
                {"plates", plates},
                {"bins_per_period", config.bins_per_period()},
                {"shots_per_bin", config.shots_per_bin()},
                {"seed", config.seed()}};
}

ExperimentConfig config_from_json(const json& j) {
    try {
        std::vector<PlateSpec> plates;
        for (const auto& p : require(j, "plates")) {
            plates.push_back({parse_beta(require(p, "beta")), require(p, "frequency").get<int>(),
                              p.value("phase0", 0.0)});
        }
        return ExperimentConfig(std::move(plates), j.value("bins_per_period", 16),
                                j.value("shots_per_bin", std::int64_t{0}),
                                j.value("seed", std::uint64_t{0}),
                                j.value("base_omega", ExperimentConfig::kDefaultBaseOmega));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed experiment config: ") + e.what());
    }
}

void write_signal_csv(std::ostream& os, const SignalRecord& rec) {
    os << 't';
    for (const auto& label : outcome_labels(rec.config.n_qubits())) {
        os << ',' << label;
    }
    os << '\n';
    for (Eigen::Index j = 0; j < rec.table.rows(); ++j) {
        os << format_double(rec.times[static_cast<std::size_t>(j)]);
        for (Eigen::Index k = 0; k < rec.table.cols(); ++k) {
            if (rec.kind == RecordKind::Counts) {
                os << ',' << static_cast<long long>(rec.table(j, k));
            } else {
                os << ',' << format_double(rec.table(j, k));
            }
        }
        os << '\n';
    }
}

json signal_sidecar(const SignalRecord& rec, const json& manifest) {
    return json{{"config", config_to_json(rec.config)},
                {"period", rec.period},
                {"kind", rec.kind == RecordKind::Counts ? "counts" : "probabilities"},
                {"outcomes", outcome_labels(rec.config.n_qubits())},
                {"manifest", manifest}};
}

SignalRecord read_signal(std::istream& csv, const json& sidecar) {
    const ExperimentConfig config = config_from_json(require(sidecar, "config"));
    const auto kind_text = require(sidecar, "kind").get<std::string>();
    if (kind_text != "counts" && kind_text != "probabilities") {
        throw ValidationError("signal kind must be \"counts\" or \"probabilities\"");
    }
    const RecordKind kind = kind_text == "counts" ? RecordKind::Counts : RecordKind::Probabilities;
    const auto labels = outcome_labels(config.n_qubits());

    std::string line;
    if (!std::getline(csv, line)) {
        throw ValidationError("signal CSV is empty");
    }
    const auto header = split(line, ',');
    if (header.size() != labels.size() + 1 || header[0] != "t") {
        throw ValidationError("signal CSV header does not match " +
                              std::to_string(config.n_qubits()) + "-qubit outcome labels");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (header[k + 1] != labels[k]) {
            throw ValidationError("signal CSV column '" + header[k + 1] + "', expected '" + labels[k] + "'");
        }
    }

    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    while (std::getline(csv, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw ValidationError("signal CSV row " + std::to_string(rows.size() + 1) +
                                  " has " + std::to_string(cells.size()) + " cells");
        }
        times.push_back(parse_double(cells[0]));
        std::vector<double> row;
        for (std::size_t k = 1; k < cells.size(); ++k) {
            row.push_back(parse_double(cells[k]));
        }
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != config.bins_per_period()) {
        throw ValidationError("signal has " + std::to_string(rows.size()) +
                              " bins but the config declares " +
                              std::to_string(config.bins_per_period()) + " per period");
    }
    SignalRecord rec{config, std::move(times),
                     Eigen::MatrixXd(static_cast<Eigen::Index>(rows.size()),
                                     static_cast<Eigen::Index>(labels.size())),
                     kind, sidecar.value("period", config.period())};
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t k = 0; k < labels.size(); ++k) {
            rec.table(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = rows[j][k];
        }
    }
    return rec;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
    auto p = csv;
    return p.replace_extension(".json");
}

json read_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": invalid JSON: " + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

void save_signal(const std::filesystem::path& csv, const SignalRecord& rec, const json& manifest) {
    std::ostringstream body;
    write_signal_csv(body, rec);
    write_text_file(csv, body.str());
    write_text_file(sidecar_path(csv), signal_sidecar(rec, manifest).dump(2) + "\n");
}

SignalRecord load_signal(const std::filesystem::path& csv) {
    const json sidecar = read_json_file(sidecar_path(csv));
    std::istringstream body(read_text_file(csv));
    return read_signal(body, sidecar);
}

std::string content_hash(const json& j) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace fttomo::io
