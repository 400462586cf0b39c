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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fttomo/cli.hpp"
#include "fttomo/errors.hpp"
#include "fttomo/ewv.hpp"
#include "fttomo/fourier.hpp"
#include "fttomo/io.hpp"
#include "fttomo/presets.hpp"
#include "fttomo/quantum_core.hpp"
#include "fttomo/reconstruction.hpp"
#include "fttomo/signal_synth.hpp"
#include "fttomo/version.hpp"
#include "fttomo/waveplate.hpp"

namespace py = pybind11;
using namespace fttomo;

namespace {

StokesVector to_stokes(const std::vector<double>& values) {
    for (int n = 1; n <= kMaxQubits; ++n) {
        if (values.size() == (std::size_t{1} << (2 * n))) {
            return StokesVector(n, values);
        }
    }
    throw ValidationError("Stokes vector length must be 4^n for n in 1..4");
}

Eigen::VectorXd stokes_array(const StokesVector& s) {
    return Eigen::Map<const Eigen::VectorXd>(s.values().data(),
                                             static_cast<Eigen::Index>(s.size()));
}

Outcome parse_outcome(char c) {
    if (c == 'H' || c == 'h') {
        return Outcome::H;
    }
    if (c == 'V' || c == 'v') {
        return Outcome::V;
    }
    throw ValidationError(std::string("outcome must be 'H' or 'V', got '") + c + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rotating wave-plate Fourier-transform state tomography";
    m.attr("__version__") = kVersion;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<RankDeficientError>(m, "RankDeficientError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    // --- quantum core
    m.def("pauli", [](int i) { return Eigen::Matrix2cd(pauli::sigma(i)); }, py::arg("index"));
    m.def("tensor", py::overload_cast<const ComplexMatrix&, const ComplexMatrix&>(&tensor));
    m.def("stokes_decompose",
          [](const ComplexMatrix& rho) { return stokes_array(stokes_decompose(rho)); },
          py::arg("rho"), "Tr[rho sigma_i1 x ... x sigma_in] for every multi-index.");
    m.def("stokes_compose",
          [](const std::vector<double>& s) { return stokes_compose(to_stokes(s)); },
          py::arg("stokes"));
    m.def("fidelity",
          [](const ComplexMatrix& a, const ComplexMatrix& b) {
              return fidelity(DensityMatrix(a), DensityMatrix(b));
          },
          py::arg("a"), py::arg("b"));
    m.def("dephase_z",
          [](const StateVector& psi, double d) { return dephase_z(psi, d).matrix(); },
          py::arg("psi"), py::arg("d"));
    m.def("project_physical",
          [](const ComplexMatrix& mat) { return project_physical(mat).matrix(); }, py::arg("m"));
    m.def("random_ginibre_state",
          [](int n, std::uint64_t seed) {
              std::mt19937_64 rng(seed);
              return random_ginibre_state(n, rng).matrix();
          },
          py::arg("n_qubits"), py::arg("seed") = 0);

    // --- wave plate
    py::class_<WavePlate>(m, "WavePlate")
        .def(py::init<double, double, double>(), py::arg("retardance"), py::arg("omega"),
             py::arg("phase0") = 0.0)
        .def_static("from_mechanical_rate", &WavePlate::from_mechanical_rate,
                    py::arg("retardance"), py::arg("mechanical_rate"), py::arg("phase0") = 0.0)
        .def_property_readonly("retardance", &WavePlate::retardance)
        .def_property_readonly("omega", &WavePlate::omega)
        .def_property_readonly("phase0", &WavePlate::phase0)
        .def_property_readonly("rotation_period", &WavePlate::rotation_period);
    m.def("rotation_axis", &rotation_axis, py::arg("plate"), py::arg("t"));
    m.def("unitary_at", &unitary_at, py::arg("plate"), py::arg("t"));
    m.def("projector",
          [](const WavePlate& wp, double t, const std::string& a) {
              if (a.size() != 1) {
                  throw ValidationError("outcome must be 'H' or 'V'");
              }
              return projector(wp, t, parse_outcome(a[0]));
          },
          py::arg("plate"), py::arg("t"), py::arg("outcome") = "H");
    m.def("chi", &chi, py::arg("plate"), py::arg("index"), py::arg("t"));
    m.def("bloch_path",
          [](const WavePlate& wp, int samples) {
              const auto path = bloch_path(wp, samples);
              Eigen::MatrixXd out(static_cast<Eigen::Index>(path.size()), 4);
              for (std::size_t k = 0; k < path.size(); ++k) {
                  const auto r = static_cast<Eigen::Index>(k);
                  out(r, 0) = path[k].t;
                  out.block(r, 1, 1, 3) = path[k].r.transpose();
              }
              return out;
          },
          py::arg("plate"), py::arg("samples"), "Rows of (t, x, y, z).");

    // --- signal synthesis
    py::class_<PlateSpec>(m, "PlateSpec")
        .def(py::init([](double beta, int frequency, double phase0) {
                 return PlateSpec{beta, frequency, phase0};
             }),
             py::arg("retardance"), py::arg("frequency"), py::arg("phase0") = 0.0)
        .def_readonly("retardance", &PlateSpec::retardance)
        .def_readonly("frequency", &PlateSpec::frequency)
        .def_readonly("phase0", &PlateSpec::phase0);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<std::vector<PlateSpec>, int, std::int64_t, std::uint64_t, double>(),
             py::arg("plates"), py::arg("bins_per_period"), py::arg("shots_per_bin") = 0,
             py::arg("seed") = 0, py::arg("base_omega") = ExperimentConfig::kDefaultBaseOmega)
        .def_static("single_qubit", &ExperimentConfig::single_qubit, py::arg("retardance"),
                    py::arg("bins_per_period") = 16, py::arg("shots_per_bin") = 0,
                    py::arg("seed") = 0)
        .def_static("two_qubit_ratio", &ExperimentConfig::two_qubit_ratio, py::arg("p"),
                    py::arg("q"), py::arg("retardance"), py::arg("bins_per_period") = 64,
                    py::arg("shots_per_bin") = 0, py::arg("seed") = 0)
        .def_property_readonly("n_qubits", &ExperimentConfig::n_qubits)
        .def_property_readonly("plates", &ExperimentConfig::plates)
        .def_property_readonly("bins_per_period", &ExperimentConfig::bins_per_period)
        .def_property_readonly("shots_per_bin", &ExperimentConfig::shots_per_bin)
        .def_property_readonly("seed", &ExperimentConfig::seed)
        .def_property_readonly("base_omega", &ExperimentConfig::base_omega)
        .def_property_readonly("period", &ExperimentConfig::period)
        .def("with_bins", &ExperimentConfig::with_bins)
        .def("with_shots", &ExperimentConfig::with_shots)
        .def("with_seed", &ExperimentConfig::with_seed)
        .def("to_json", [](const ExperimentConfig& c) { return io::config_to_json(c).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return io::config_from_json(io::json::parse(text));
        });

    m.def("period", py::overload_cast<int, int, double>(&period), py::arg("p"), py::arg("q"),
          py::arg("omega1"));
    m.def("harmonic_set", &harmonic_set, py::arg("config"));
    m.def("outcome_probability",
          [](const ComplexMatrix& rho, const ExperimentConfig& config, double t,
             const std::string& outcomes) {
              std::vector<Outcome> o;
              for (char ch : outcomes) {
                  o.push_back(parse_outcome(ch));
              }
              return outcome_probability(DensityMatrix(rho), config, t, o);
          },
          py::arg("rho"), py::arg("config"), py::arg("t"), py::arg("outcomes"));

    py::class_<SignalRecord>(m, "SignalRecord")
        .def_readonly("config", &SignalRecord::config)
        .def_readonly("times", &SignalRecord::times)
        .def_readonly("table", &SignalRecord::table)
        .def_readonly("period", &SignalRecord::period)
        .def_property_readonly("kind",
                               [](const SignalRecord& r) {
                                   return r.kind == RecordKind::Counts ? "counts" : "probabilities";
                               })
        .def_property_readonly("outcomes",
                               [](const SignalRecord& r) { return outcome_labels(r.config.n_qubits()); })
        .def("to_csv", [](const SignalRecord& r) {
            std::ostringstream os;
            io::write_signal_csv(os, r);
            return os.str();
        });
    m.def("synthesize",
          [](const ComplexMatrix& rho, const ExperimentConfig& c) {
              return synthesize(DensityMatrix(rho), c);
          },
          py::arg("rho"), py::arg("config"));
    m.def("empirical_probabilities", &empirical_probabilities, py::arg("record"));
    m.def("coincidence_signal", &coincidence_signal, py::arg("record"));

    // --- Fourier analysis
    py::class_<FourierSpectrum>(m, "FourierSpectrum")
        .def_readonly("a", &FourierSpectrum::a)
        .def_readonly("b", &FourierSpectrum::b)
        .def_readonly("period", &FourierSpectrum::period)
        .def_property_readonly("fundamental", &FourierSpectrum::fundamental)
        .def_property_readonly("max_harmonic", &FourierSpectrum::max_harmonic);
    m.def("analyze",
          [](const std::vector<double>& x, double period) { return analyze(x, period); },
          py::arg("samples"), py::arg("period"));
    m.def("analyze_direct",
          [](const std::vector<double>& x, double period) { return analyze_direct(x, period); },
          py::arg("samples"), py::arg("period"));
    m.def("synthesize_from_spectrum", &synthesize_from_spectrum, py::arg("spectrum"), py::arg("t"));

    // --- reconstruction
    py::class_<TransferMatrix>(m, "TransferMatrix")
        .def_readonly("n_qubits", &TransferMatrix::n_qubits)
        .def_readonly("matrix", &TransferMatrix::matrix)
        .def_property_readonly("rows", [](const TransferMatrix& tm) {
            std::vector<std::string> labels;
            for (const auto& r : tm.rows) {
                labels.push_back(r.str());
            }
            return labels;
        });
    py::class_<IdentifiabilityReport>(m, "IdentifiabilityReport")
        .def_readonly("rank", &IdentifiabilityReport::rank)
        .def_readonly("unknowns", &IdentifiabilityReport::unknowns)
        .def_readonly("condition_number", &IdentifiabilityReport::condition_number)
        .def_readonly("singular_values", &IdentifiabilityReport::singular_values)
        .def_property_readonly("identifiable", &IdentifiabilityReport::identifiable);
    m.def("build_transfer_matrix", &build_transfer_matrix, py::arg("config"));
    m.def("check_identifiability", &check_identifiability, py::arg("transfer_matrix"));
    m.def("invert_1q",
          [](const FourierSpectrum& s, double beta) { return stokes_array(invert_1q(s, beta)); },
          py::arg("spectrum"), py::arg("retardance"));
    m.def("invert_2q",
          [](const FourierSpectrum& s, double b1, double b2) {
              return stokes_array(invert_2q(s, b1, b2));
          },
          py::arg("spectrum"), py::arg("retardance1"), py::arg("retardance2"));
    m.def("invert_generic",
          [](const FourierSpectrum& s, const TransferMatrix& tm) {
              return stokes_array(invert_generic(s, tm));
          },
          py::arg("spectrum"), py::arg("transfer_matrix"));

    py::class_<Reconstruction>(m, "Reconstruction")
        .def_property_readonly("stokes", [](const Reconstruction& r) { return stokes_array(r.stokes); })
        .def_readonly("rho_raw", &Reconstruction::rho_raw)
        .def_property_readonly("rho_physical",
                               [](const Reconstruction& r) -> py::object {
                                   if (!r.rho_physical) {
                                       return py::none();
                                   }
                                   return py::cast(ComplexMatrix(r.rho_physical->matrix()));
                               })
        .def_readonly("spectrum", &Reconstruction::spectrum)
        .def_readonly("condition_number", &Reconstruction::condition_number);
    m.def("reconstruct",
          [](const SignalRecord& rec, bool physical, const std::string& normalize) {
              ReconstructOptions opts;
              opts.physical = physical;
              if (normalize == "always") {
                  opts.normalization = Normalization::Always;
              } else if (normalize == "never") {
                  opts.normalization = Normalization::Never;
              } else if (normalize != "auto") {
                  throw ValidationError("normalize must be 'auto', 'always' or 'never'");
              }
              return reconstruct(rec, opts);
          },
          py::arg("record"), py::arg("physical") = false, py::arg("normalize") = "auto");

    // --- EWV
    m.def("instrument_matrix",
          [](double beta, int bins, bool edge) {
              return instrument_matrix(beta, bins, edge ? BinSampling::Edge : BinSampling::Center);
          },
          py::arg("retardance"), py::arg("bins"), py::arg("edge_sampled") = false);
    m.def("ewv", &ewv, py::arg("retardance"), py::arg("bins"));
    m.def("ewv_scan",
          [](double lo, double hi, int steps, int bins) {
              const auto scan = ewv_scan(lo, hi, steps, bins);
              std::vector<std::pair<double, double>> pts;
              for (const auto& p : scan.points) {
                  pts.emplace_back(p.beta, p.ewv_times_n);
              }
              return py::make_tuple(pts, scan.beta_min, scan.ewv_times_n_min);
          },
          py::arg("beta_min"), py::arg("beta_max"), py::arg("steps"), py::arg("bins"),
          "Returns (points, beta_min, ewv_times_n_min).");

    // --- worked examples
    auto presets_mod = m.def_submodule("presets", "Worked-example states and settings");
    presets_mod.attr("RETARDANCE") = presets::kRetardance;
    presets_mod.def("one_qubit_state", [](double d) { return presets::one_qubit_state(d).matrix(); },
                    py::arg("d") = 0.1);
    presets_mod.def("two_qubit_state", [] { return presets::two_qubit_state().matrix(); });
    presets_mod.def("one_qubit_config", &presets::one_qubit_config, py::arg("bins") = 16,
                    py::arg("shots") = 0, py::arg("seed") = 0);
    presets_mod.def("two_qubit_config", &presets::two_qubit_config, py::arg("ratio") = 5,
                    py::arg("bins") = 64, py::arg("shots") = 0, py::arg("seed") = 0);

    m.def("cli_main",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = cli::run(args, out, err);
              py::print(out.str(), py::arg("end") = "");
              if (!err.str().empty()) {
                  py::print(err.str(), py::arg("end") = "",
                            py::arg("file") = py::module_::import("sys").attr("stderr"));
              }
              return code;
          },
          py::arg("args"), "Runs the command-line tool in-process; returns its exit code.");
}
