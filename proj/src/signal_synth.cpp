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

#include "fttomo/signal_synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "fttomo/errors.hpp"

namespace fttomo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int frequency_gcd(const std::vector<PlateSpec>& plates) {
    int g = 0;
    for (const auto& p : plates) {
        g = std::gcd(g, p.frequency);
    }
    return g;
}

// Tr[op P] for P = M^{k1} (x) ... (x) M^{kn}.
double trace_against(const ComplexMatrix& op, const ComplexMatrix& p) {
    return op.cwiseProduct(p.transpose()).sum().real();
}

ComplexMatrix joint_projector(const std::vector<std::array<Eigen::Matrix2cd, 2>>& per_plate,
                              std::size_t outcome_index) {
    const int n = static_cast<int>(per_plate.size());
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = (outcome_index >> (n - 1 - q)) & 1U;
        out = tensor(out, ComplexMatrix(per_plate[static_cast<std::size_t>(q)][bit]));
    }
    return out;
}

std::vector<std::array<Eigen::Matrix2cd, 2>> plate_projectors(const std::vector<WavePlate>& plates,
                                                              double t) {
    std::vector<std::array<Eigen::Matrix2cd, 2>> out;
    out.reserve(plates.size());
    for (const auto& wp : plates) {
        out.push_back({projector(wp, t, Outcome::H), projector(wp, t, Outcome::V)});
    }
    return out;
}

} // namespace

// --- ExperimentConfig --------------------------------------------------------

ExperimentConfig::ExperimentConfig(std::vector<PlateSpec> plates, int bins_per_period,
                                   std::int64_t shots_per_bin, std::uint64_t seed,
                                   double base_omega)
    : plates_(std::move(plates)), bins_(bins_per_period), shots_(shots_per_bin), seed_(seed),
      base_omega_(base_omega) {
    if (plates_.empty() || static_cast<int>(plates_.size()) > kMaxQubits) {
        throw ValidationError("experiment needs 1.." + std::to_string(kMaxQubits) +
                              " wave plates, got " + std::to_string(plates_.size()));
    }
    if (!(base_omega_ > 0.0) || !std::isfinite(base_omega_)) {
        throw ValidationError("base angular frequency must be positive");
    }
    for (std::size_t m = 0; m < plates_.size(); ++m) {
        if (plates_[m].frequency <= 0) {
            throw ValidationError("plate " + std::to_string(m + 1) +
                                  " frequency must be a positive integer");
        }
        if (m > 0 && plates_[m].frequency <= plates_[m - 1].frequency) {
            throw ValidationError("plate frequencies must be strictly increasing (omega_" +
                                  std::to_string(m) + " < omega_" + std::to_string(m + 1) +
                                  "), got " + std::to_string(plates_[m - 1].frequency) +
                                  " then " + std::to_string(plates_[m].frequency));
        }
        require_nonsingular_retardance(plates_[m].retardance);
    }
    if (shots_ < 0) {
        throw ValidationError("shots per bin must be non-negative");
    }
    const auto harmonics = harmonic_set(*this);
    const int f_max = harmonics.empty() ? 0 : harmonics.back();
    if (bins_ < 2 * f_max + 1) {
        throw ValidationError("bins per period " + std::to_string(bins_) +
                              " is below the Nyquist minimum " + std::to_string(2 * f_max + 1) +
                              " for highest harmonic " + std::to_string(f_max));
    }
}

ExperimentConfig ExperimentConfig::single_qubit(double retardance, int bins_per_period,
                                                std::int64_t shots_per_bin, std::uint64_t seed) {
    return ExperimentConfig({{retardance, 1}}, bins_per_period, shots_per_bin, seed);
}

ExperimentConfig ExperimentConfig::two_qubit_ratio(int p, int q, double retardance,
                                                   int bins_per_period, std::int64_t shots_per_bin,
                                                   std::uint64_t seed) {
    if (p <= 0 || q <= 0) {
        throw ValidationError("frequency ratio p/q needs positive integers");
    }
    return ExperimentConfig({{retardance, q}, {retardance, p}}, bins_per_period, shots_per_bin,
                            seed, kDefaultBaseOmega / q);
}

std::vector<WavePlate> ExperimentConfig::wave_plates() const {
    std::vector<WavePlate> out;
    out.reserve(plates_.size());
    for (const auto& p : plates_) {
        out.emplace_back(p.retardance, base_omega_ * p.frequency, p.phase0);
    }
    return out;
}

double ExperimentConfig::period() const {
    return 2.0 * M_PI / (base_omega_ * frequency_gcd(plates_));
}

double ExperimentConfig::fundamental() const { return base_omega_ * frequency_gcd(plates_); }

std::vector<int> ExperimentConfig::harmonic_units() const {
    const int g = frequency_gcd(plates_);
    std::vector<int> out;
    for (const auto& p : plates_) {
        out.push_back(p.frequency / g);
    }
    return out;
}

double ExperimentConfig::bin_center(int j) const {
    return (static_cast<double>(j) + 0.5) * period() / static_cast<double>(bins_);
}

ExperimentConfig ExperimentConfig::with_bins(int bins) const {
    return ExperimentConfig(plates_, bins, shots_, seed_, base_omega_);
}

ExperimentConfig ExperimentConfig::with_shots(std::int64_t shots) const {
    return ExperimentConfig(plates_, bins_, shots, seed_, base_omega_);
}

ExperimentConfig ExperimentConfig::with_seed(std::uint64_t seed) const {
    return ExperimentConfig(plates_, bins_, shots_, seed, base_omega_);
}

// --- Period and band structure ---------------------------------------------

double period(int p, int q, double omega1) {
    if (p <= 0 || q <= 0) {
        throw ValidationError("period: p and q must be positive integers");
    }
    if (p <= q) {
        throw ValidationError("period: ratio p/q must exceed 1 (omega1 < omega2)");
    }
    if (!(omega1 > 0.0)) {
        throw ValidationError("period: omega1 must be positive");
    }
    return 2.0 * M_PI * q / (omega1 * std::gcd(p, q));
}

std::vector<int> harmonic_set(const ExperimentConfig& config) {
    std::set<int> current{0};
    for (int f : config.harmonic_units()) {
        std::set<int> next;
        for (int h : current) {
            for (int x : {0, f, 2 * f}) {
                next.insert(std::abs(h + x));
                next.insert(std::abs(h - x));
            }
        }
        current = std::move(next);
    }
    current.erase(0);
    return {current.begin(), current.end()};
}

// --- Outcome probabilities ---------------------------------------------------

std::string outcome_label(std::size_t index, int n_qubits) {
    std::string label;
    for (int q = 0; q < n_qubits; ++q) {
        label.push_back(((index >> (n_qubits - 1 - q)) & 1U) ? 'V' : 'H');
    }
    return label;
}

std::vector<std::string> outcome_labels(int n_qubits) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < (std::size_t{1} << n_qubits); ++k) {
        out.push_back(outcome_label(k, n_qubits));
    }
    return out;
}

double outcome_probability(const DensityMatrix& rho, const ExperimentConfig& config, double t,
                           std::span<const Outcome> outcomes) {
    if (static_cast<int>(outcomes.size()) != config.n_qubits()) {
        throw ValidationError("outcome string length " + std::to_string(outcomes.size()) +
                              " does not match " + std::to_string(config.n_qubits()) + " qubits");
    }
    if (rho.n_qubits() != config.n_qubits()) {
        throw ValidationError("state has " + std::to_string(rho.n_qubits()) +
                              " qubits but the experiment has " +
                              std::to_string(config.n_qubits()));
    }
    std::size_t index = 0;
    for (Outcome o : outcomes) {
        index = (index << 1U) | static_cast<std::size_t>(o);
    }
    const auto per_plate = plate_projectors(config.wave_plates(), t);
    return trace_against(rho.matrix(), joint_projector(per_plate, index));
}

std::vector<double> outcome_distribution(const ComplexMatrix& op, const ExperimentConfig& config,
                                         double t) {
    const int n = config.n_qubits();
    if (op.rows() != register_dimension(n) || op.cols() != op.rows()) {
        throw ValidationError("operator dimension does not match " + std::to_string(n) + " qubits");
    }
    const auto per_plate = plate_projectors(config.wave_plates(), t);
    std::vector<double> out(std::size_t{1} << n);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = trace_against(op, joint_projector(per_plate, k));
    }
    return out;
}

std::vector<double> ideal_signal(const ComplexMatrix& op, const ExperimentConfig& config) {
    const int n = config.n_qubits();
    if (op.rows() != register_dimension(n) || op.cols() != op.rows()) {
        throw ValidationError("operator dimension does not match " + std::to_string(n) + " qubits");
    }
    const auto plates = config.wave_plates();
    std::vector<double> out(static_cast<std::size_t>(config.bins_per_period()));
    for (int j = 0; j < config.bins_per_period(); ++j) {
        const auto per_plate = plate_projectors(plates, config.bin_center(j));
        out[static_cast<std::size_t>(j)] = trace_against(op, joint_projector(per_plate, 0));
    }
    return out;
}

// --- Sampling ----------------------------------------------------------------

std::vector<std::int64_t> sample_multinomial(std::int64_t n, std::span<const double> p,
                                             std::mt19937_64& rng) {
    std::vector<std::int64_t> counts(p.size(), 0);
    double remaining_mass = 0.0;
    for (double v : p) {
        if (v < 0.0) {
            throw ValidationError("multinomial probabilities must be non-negative");
        }
        remaining_mass += v;
    }
    std::int64_t remaining = n;
    for (std::size_t k = 0; k + 1 < p.size() && remaining > 0; ++k) {
        if (remaining_mass <= 0.0) {
            break;
        }
        const double q = std::clamp(p[k] / remaining_mass, 0.0, 1.0);
        std::binomial_distribution<std::int64_t> binom(remaining, q);
        counts[k] = binom(rng);
        remaining -= counts[k];
        remaining_mass -= p[k];
    }
    if (!p.empty()) {
        counts.back() += remaining;
    }
    return counts;
}

std::mt19937_64 bin_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

SignalRecord synthesize(const DensityMatrix& rho, const ExperimentConfig& config) {
    if (rho.n_qubits() != config.n_qubits()) {
        throw ValidationError("state has " + std::to_string(rho.n_qubits()) +
                              " qubits but the experiment has " +
                              std::to_string(config.n_qubits()));
    }
    const int bins = config.bins_per_period();
    const auto outcomes = std::size_t{1} << config.n_qubits();
    SignalRecord rec{config, {}, Eigen::MatrixXd(bins, static_cast<Eigen::Index>(outcomes)),
                     config.noiseless() ? RecordKind::Probabilities : RecordKind::Counts,
                     config.period()};
    rec.times.reserve(static_cast<std::size_t>(bins));
    for (int j = 0; j < bins; ++j) {
        const double t = config.bin_center(j);
        rec.times.push_back(t);
        auto probs = outcome_distribution(rho.matrix(), config, t);
        if (config.noiseless()) {
            for (std::size_t k = 0; k < outcomes; ++k) {
                rec.table(j, static_cast<Eigen::Index>(k)) = probs[k];
            }
        } else {
            for (double& v : probs) {
                v = std::clamp(v, 0.0, 1.0);
            }
            auto rng = bin_rng(config.seed(), static_cast<std::uint64_t>(j));
            const auto counts = sample_multinomial(config.shots_per_bin(), probs, rng);
            for (std::size_t k = 0; k < outcomes; ++k) {
                rec.table(j, static_cast<Eigen::Index>(k)) = static_cast<double>(counts[k]);
            }
        }
    }
    return rec;
}

Eigen::MatrixXd empirical_probabilities(const SignalRecord& rec) {
    Eigen::MatrixXd out = rec.table;
    for (Eigen::Index j = 0; j < out.rows(); ++j) {
        const double total = out.row(j).sum();
        if (!(total > 0.0)) {
            throw ValidationError("bin " + std::to_string(j) + " has zero total counts");
        }
        if (rec.kind == RecordKind::Counts) {
            out.row(j) /= total;
        }
    }
    return out;
}

std::vector<double> coincidence_signal(const SignalRecord& rec) {
    const Eigen::MatrixXd p = empirical_probabilities(rec);
    return {p.col(0).data(), p.col(0).data() + p.rows()};
}

} // namespace fttomo
