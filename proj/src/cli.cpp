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

#include "fttomo/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fttomo/errors.hpp"
#include "fttomo/ewv.hpp"
#include "fttomo/fourier.hpp"
#include "fttomo/io.hpp"
#include "fttomo/presets.hpp"
#include "fttomo/reconstruction.hpp"
#include "fttomo/text_format.hpp"
#include "fttomo/version.hpp"
#include "fttomo/waveplate.hpp"

namespace fttomo::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

json make_manifest(const std::string& command, const std::string& config_path,
                   std::vector<std::string> inputs, std::vector<std::string> outputs,
                   std::optional<std::uint64_t> seed) {
    json m{{"command", command},
           {"config", config_path},
           {"inputs", std::move(inputs)},
           {"outputs", std::move(outputs)},
           {"seed", seed ? json(*seed) : json(nullptr)},
           {"tool_version", kVersion}};
    m["hash"] = io::content_hash(m);
    return m;
}

fs::path manifest_path(const fs::path& out) {
    auto p = out;
    p += ".manifest.json";
    return p;
}

std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double stokes_mse(const StokesVector& est, const StokesVector& truth) {
    double sum = 0.0;
    for (std::size_t k = 0; k < est.size(); ++k) {
        const double d = est[k] - truth[k];
        sum += d * d;
    }
    return sum / static_cast<double>(est.size());
}

std::vector<std::int64_t> parse_shot_list(const std::vector<std::string>& items) {
    std::vector<std::int64_t> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (cell.empty()) {
                continue;
            }
            const double v = parse_double(cell);
            if (v < 0 || v != std::floor(v)) {
                throw ValidationError("shot counts must be non-negative integers, got '" + cell + "'");
            }
            out.push_back(static_cast<std::int64_t>(v));
        }
    }
    if (out.empty()) {
        throw ValidationError("--shots needs at least one value");
    }
    return out;
}

// --- simulate ----------------------------------------------------------------

struct SimulateArgs {
    std::string config;
    std::string state;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> shots;
    std::optional<int> bins;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    ExperimentConfig config = io::config_from_json(io::read_json_file(a.config));
    if (a.bins) {
        config = config.with_bins(*a.bins);
    }
    if (a.shots) {
        config = config.with_shots(*a.shots);
    }
    if (a.seed) {
        config = config.with_seed(*a.seed);
    }
    const DensityMatrix rho = io::density_from_json(io::read_json_file(a.state));
    if (rho.n_qubits() != config.n_qubits()) {
        throw ValidationError("state has " + std::to_string(rho.n_qubits()) +
                              " qubits but the config has " + std::to_string(config.n_qubits()) +
                              " plates");
    }
    const fs::path csv = a.out;
    if (csv.extension() == ".json") {
        throw ValidationError("signal output must not use the .json extension (reserved for the sidecar)");
    }
    const SignalRecord rec = synthesize(rho, config);
    const json manifest = make_manifest("simulate", a.config, {a.state},
                                        {csv.string(), io::sidecar_path(csv).string()},
                                        config.seed());
    io::save_signal(csv, rec, manifest);
    out << "wrote " << rec.bins() << " bins x " << rec.table.cols() << " outcomes to " << csv.string()
        << (config.noiseless() ? " (noiseless)" : "") << '\n';
    return kOk;
}

// --- reconstruct -------------------------------------------------------------

struct ReconstructArgs {
    std::string signal;
    std::string out;
    bool physical = false;
    std::string truth;
    std::string normalize = "auto";
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out) {
    const SignalRecord rec = io::load_signal(a.signal);
    ReconstructOptions opts;
    opts.physical = a.physical;
    if (a.normalize == "always") {
        opts.normalization = Normalization::Always;
    } else if (a.normalize == "never") {
        opts.normalization = Normalization::Never;
    }
    std::optional<DensityMatrix> truth;
    if (!a.truth.empty()) {
        truth = io::density_from_json(io::read_json_file(a.truth));
        if (truth->n_qubits() != rec.config.n_qubits()) {
            throw ValidationError("truth state dimension does not match the signal");
        }
    }
    const Reconstruction r = reconstruct(rec, opts);

    std::vector<std::string> inputs{a.signal};
    if (!a.truth.empty()) {
        inputs.push_back(a.truth);
    }
    json report{{"stokes", r.stokes.values()},
                {"rho_raw", io::matrix_to_json(r.rho_raw)},
                {"rho_physical",
                 r.rho_physical ? io::matrix_to_json(r.rho_physical->matrix()) : json(nullptr)},
                {"fidelity_vs_truth", nullptr},
                {"condition_number", r.condition_number},
                {"manifest", make_manifest("reconstruct", io::sidecar_path(a.signal).string(), inputs,
                                           {a.out}, rec.config.seed())}};
    if (truth) {
        const DensityMatrix estimate = r.rho_physical ? *r.rho_physical : project_physical(r.rho_raw);
        report["fidelity_vs_truth"] = fidelity(*truth, estimate);
    }
    io::write_text_file(a.out, report.dump(2) + "\n");
    out << "reconstructed " << rec.config.n_qubits() << "-qubit state, condition number "
        << short_double(r.condition_number);
    if (truth) {
        out << ", fidelity " << format_double(report["fidelity_vs_truth"].get<double>());
    }
    out << '\n';
    return kOk;
}

// --- spectrum ----------------------------------------------------------------

int cmd_spectrum(const std::string& signal, const std::string& out_path, std::ostream& out) {
    const SignalRecord rec = io::load_signal(signal);
    const auto spec = analyze(coincidence_signal(rec), rec.period);
    std::ostringstream body;
    write_spectrum_csv(body, spec);
    io::write_text_file(out_path, body.str());
    io::write_text_file(manifest_path(out_path),
                        make_manifest("spectrum", io::sidecar_path(signal).string(), {signal},
                                      {out_path}, rec.config.seed())
                                .dump(2) + "\n");
    out << "wrote harmonics 0.." << spec.max_harmonic() << " to " << out_path << '\n';
    return kOk;
}

// --- ewv-scan ----------------------------------------------------------------

struct EwvArgs {
    std::vector<std::string> beta_range{"0.1", "pi-0.1"};
    int steps = 500;
    int bins = 100;
    std::string out;
};

double parse_range_end(const std::string& text) {
    // "pi-0.1" style: pi expression followed by an offset
    const auto minus = text.rfind('-');
    if (text.find("pi") != std::string::npos && minus != std::string::npos && minus > 0 &&
        text.find("pi") < minus) {
        return parse_angle(text.substr(0, minus)) - parse_double(text.substr(minus + 1));
    }
    return parse_angle(text);
}

int cmd_ewv_scan(const EwvArgs& a, std::ostream& out) {
    if (a.beta_range.size() != 2) {
        throw ValidationError("--beta-range takes exactly two values");
    }
    const EwvScan scan =
        ewv_scan(parse_range_end(a.beta_range[0]), parse_range_end(a.beta_range[1]), a.steps, a.bins);
    if (!a.out.empty()) {
        std::ostringstream body;
        write_ewv_csv(body, scan);
        io::write_text_file(a.out, body.str());
        io::write_text_file(manifest_path(a.out),
                            make_manifest("ewv-scan", "", {}, {a.out}, std::nullopt).dump(2) + "\n");
    }
    out << "beta*=" << short_double(scan.beta_min) << ", ewv*N=" << short_double(scan.ewv_times_n_min)
        << '\n';
    return kOk;
}

// --- roundtrip ---------------------------------------------------------------

struct RoundtripArgs {
    std::string config;
    std::string state;
    std::vector<std::string> shots{"0"};
    int seeds = 1;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_roundtrip(const RoundtripArgs& a, std::ostream& out) {
    const ExperimentConfig base = io::config_from_json(io::read_json_file(a.config));
    const DensityMatrix truth = io::density_from_json(io::read_json_file(a.state));
    if (truth.n_qubits() != base.n_qubits()) {
        throw ValidationError("state dimension does not match the config");
    }
    if (a.seeds < 1) {
        throw ValidationError("--seeds must be at least 1");
    }
    const auto shot_list = parse_shot_list(a.shots);
    // Validate every shot count before spawning workers.
    for (auto shots : shot_list) {
        (void)base.with_shots(shots);
    }
    if (!check_identifiability(build_transfer_matrix(base)).identifiable()) {
        throw RankDeficientError("configuration is not identifiable");
    }

    const StokesVector truth_stokes = stokes_decompose(truth);
    struct Cell {
        std::int64_t shots;
        std::uint64_t seed;
        double fidelity = 0.0;
        double mse = 0.0;
    };
    std::vector<Cell> cells;
    for (auto shots : shot_list) {
        for (int k = 0; k < a.seeds; ++k) {
            cells.push_back({shots, a.seed + static_cast<std::uint64_t>(k)});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        return x.shots != y.shots ? x.shots < y.shots : x.seed < y.seed;
    });

    const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(cells.size()));
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < cells.size(); i += workers) {
                        auto& cell = cells[i];
                        const auto cfg = base.with_shots(cell.shots).with_seed(cell.seed);
                        const auto r = reconstruct(synthesize(truth, cfg));
                        cell.fidelity = fidelity(truth, project_physical(r.rho_raw));
                        cell.mse = stokes_mse(r.stokes, truth_stokes);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    std::ostringstream body;
    body << "shots,seed,fidelity,stokes_mse\n";
    for (const auto& c : cells) {
        body << c.shots << ',' << c.seed << ',' << format_double(c.fidelity) << ','
             << format_double(c.mse) << '\n';
    }
    io::write_text_file(a.out, body.str());
    io::write_text_file(manifest_path(a.out),
                        make_manifest("roundtrip", a.config, {a.state}, {a.out}, a.seed).dump(2) + "\n");
    out << "wrote " << cells.size() << " round-trip rows to " << a.out << '\n';
    return kOk;
}

// --- bloch-path --------------------------------------------------------------

int cmd_bloch_path(const std::string& beta, int samples, const std::string& out_path,
                   std::ostream& out) {
    const WavePlate wp(parse_angle(beta), 2.0 * M_PI);
    const auto path = bloch_path(wp, samples);
    std::ostringstream body;
    write_bloch_path_csv(body, path);
    io::write_text_file(out_path, body.str());
    io::write_text_file(manifest_path(out_path),
                        make_manifest("bloch-path", "", {}, {out_path}, std::nullopt).dump(2) + "\n");
    out << "wrote " << path.size() << " Bloch points to " << out_path << '\n';
    return kOk;
}

// --- preset ------------------------------------------------------------------

int cmd_preset(const std::string& name, const std::string& config_out, const std::string& state_out,
               std::ostream& out) {
    std::optional<ExperimentConfig> config;
    std::optional<DensityMatrix> state;
    if (name == "one-qubit") {
        config = presets::one_qubit_config();
        state = presets::one_qubit_state();
    } else if (name == "two-qubit") {
        config = presets::two_qubit_config();
        state = presets::two_qubit_state();
    } else if (name == "two-qubit-r2") {
        config = presets::two_qubit_config(2);
        state = presets::two_qubit_state();
    } else {
        throw ValidationError("unknown preset '" + name + "' (one-qubit, two-qubit, two-qubit-r2)");
    }
    io::write_text_file(config_out, io::config_to_json(*config).dump(2) + "\n");
    io::write_text_file(state_out, io::matrix_to_json(state->matrix()).dump(2) + "\n");
    out << "wrote " << config_out << " and " << state_out << '\n';
    return kOk;
}

} // namespace

unsigned thread_budget() {
    if (const char* env = std::getenv("FTT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rotating wave-plate Fourier-transform state tomography", "fttomo"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Synthesize a detection record for a state");
    simulate->add_option("--config", sim.config, "Experiment config JSON")->required();
    simulate->add_option("--state", sim.state, "Density matrix JSON")->required();
    simulate->add_option("--out", sim.out, "Signal CSV (sidecar written next to it)")->required();
    simulate->add_option("--seed", sim.seed, "Override the config seed");
    simulate->add_option("--shots", sim.shots, "Override shots per bin (0 = noiseless)");
    simulate->add_option("--bins", sim.bins, "Override bins per period");

    ReconstructArgs rec;
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Reconstruct a state from a signal");
    reconstruct_cmd->add_option("signal", rec.signal, "Signal CSV")->required();
    reconstruct_cmd->add_option("--out", rec.out, "Report JSON")->required();
    reconstruct_cmd->add_flag("--physical", rec.physical, "Also report the nearest physical state");
    reconstruct_cmd->add_option("--truth", rec.truth, "True state JSON for a fidelity figure");
    reconstruct_cmd->add_option("--normalize", rec.normalize, "Divide by estimated S_0..0")
        ->check(CLI::IsMember({"auto", "always", "never"}));

    std::string spec_signal;
    std::string spec_out;
    auto* spectrum = app.add_subcommand("spectrum", "Export the H..H signal's Fourier coefficients");
    spectrum->add_option("signal", spec_signal, "Signal CSV")->required();
    spectrum->add_option("--out", spec_out, "Spectrum CSV")->required();

    EwvArgs ewv_args;
    auto* ewv_cmd = app.add_subcommand("ewv-scan", "Scan equally weighted variance over retardance");
    ewv_cmd->add_option("--beta-range", ewv_args.beta_range, "MIN MAX (numbers or pi expressions)")
        ->expected(2);
    ewv_cmd->add_option("--steps", ewv_args.steps, "Grid points");
    ewv_cmd->add_option("--bins", ewv_args.bins, "Bins per period");
    ewv_cmd->add_option("--out", ewv_args.out, "Scan CSV");

    RoundtripArgs rt;
    auto* roundtrip = app.add_subcommand("roundtrip", "Fidelity versus shot count over seeds");
    roundtrip->add_option("--config", rt.config, "Experiment config JSON")->required();
    roundtrip->add_option("--state", rt.state, "Density matrix JSON")->required();
    roundtrip->add_option("--shots", rt.shots, "Shot counts, comma separated")->delimiter(',');
    roundtrip->add_option("--seeds", rt.seeds, "Seeds per shot count");
    roundtrip->add_option("--seed", rt.seed, "First seed");
    roundtrip->add_option("--out", rt.out, "Result CSV")->required();

    std::string bloch_beta = "11pi/15";
    int bloch_samples = 201;
    std::string bloch_out;
    auto* bloch = app.add_subcommand("bloch-path", "Bloch-sphere path of the H-port projector");
    bloch->add_option("--beta", bloch_beta, "Retardance");
    bloch->add_option("--samples", bloch_samples, "Samples over one rotation");
    bloch->add_option("--out", bloch_out, "Path CSV")->required();

    std::string preset_name;
    std::string preset_config;
    std::string preset_state;
    auto* preset = app.add_subcommand("preset", "Write a worked-example config and state");
    preset->add_option("name", preset_name, "one-qubit | two-qubit | two-qubit-r2")->required();
    preset->add_option("--config", preset_config, "Config JSON to write")->required();
    preset->add_option("--state", preset_state, "State JSON to write")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidationError;
    }

    try {
        if (*simulate) {
            return cmd_simulate(sim, out);
        }
        if (*reconstruct_cmd) {
            return cmd_reconstruct(rec, out);
        }
        if (*spectrum) {
            return cmd_spectrum(spec_signal, spec_out, out);
        }
        if (*ewv_cmd) {
            return cmd_ewv_scan(ewv_args, out);
        }
        if (*roundtrip) {
            return cmd_roundtrip(rt, out);
        }
        if (*bloch) {
            return cmd_bloch_path(bloch_beta, bloch_samples, bloch_out, out);
        }
        if (*preset) {
            return cmd_preset(preset_name, preset_config, preset_state, out);
        }
    } catch (const RankDeficientError& e) {
        err << "error: " << e.what() << '\n';
        return kUnidentifiable;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kValidationError;
}

} // namespace fttomo::cli
