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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fttomo/quantum_core.hpp"
#include "fttomo/waveplate.hpp"

namespace fttomo {

/// One qubit mode's analyzer. `frequency` is an integer multiple of the
/// experiment's base angular rate, so every ratio between plates is rational.
struct PlateSpec {
    double retardance;
    int frequency;
    double phase0 = 0.0;
};

/// Validated measurement settings for an n-qubit run.
///
/// Invariants: 1 <= n <= kMaxQubits, plate frequencies strictly increasing
/// and positive, every retardance away from multiples of pi, and
/// bins_per_period >= 2 f_max + 1 where f_max is the highest harmonic the
/// H...H signal can contain.
class ExperimentConfig {
public:
    static constexpr double kDefaultBaseOmega = 2.0 * M_PI;

    ExperimentConfig(std::vector<PlateSpec> plates, int bins_per_period,
                     std::int64_t shots_per_bin = 0, std::uint64_t seed = 0,
                     double base_omega = kDefaultBaseOmega);

    /// Single plate at the base rate.
    static ExperimentConfig single_qubit(double retardance, int bins_per_period = 16,
                                         std::int64_t shots_per_bin = 0, std::uint64_t seed = 0);

    /// Two plates with omega2 / omega1 = p / q and equal retardance.
    static ExperimentConfig two_qubit_ratio(int p, int q, double retardance,
                                            int bins_per_period = 64,
                                            std::int64_t shots_per_bin = 0,
                                            std::uint64_t seed = 0);

    [[nodiscard]] int n_qubits() const noexcept { return static_cast<int>(plates_.size()); }
    [[nodiscard]] const std::vector<PlateSpec>& plates() const noexcept { return plates_; }
    [[nodiscard]] int bins_per_period() const noexcept { return bins_; }
    [[nodiscard]] std::int64_t shots_per_bin() const noexcept { return shots_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] double base_omega() const noexcept { return base_omega_; }
    [[nodiscard]] bool noiseless() const noexcept { return shots_ == 0; }

    [[nodiscard]] std::vector<WavePlate> wave_plates() const;

    /// Common period of all plate signals, 2 pi / (base_omega gcd(frequencies)).
    [[nodiscard]] double period() const;
    /// 2 pi / period.
    [[nodiscard]] double fundamental() const;
    /// Plate frequencies in units of the fundamental.
    [[nodiscard]] std::vector<int> harmonic_units() const;
    /// Centre of bin j, (j + 1/2) T / N.
    [[nodiscard]] double bin_center(int j) const;

    [[nodiscard]] ExperimentConfig with_bins(int bins) const;
    [[nodiscard]] ExperimentConfig with_shots(std::int64_t shots) const;
    [[nodiscard]] ExperimentConfig with_seed(std::uint64_t seed) const;

private:
    std::vector<PlateSpec> plates_;
    int bins_;
    std::int64_t shots_;
    std::uint64_t seed_;
    double base_omega_;
};

/// Period of a two-plate signal with omega2/omega1 = p/q:
/// T = 2 pi q / (omega1 gcd(p, q)). Requires p > q >= 1.
double period(int p, int q, double omega1);

/// Absolute harmonics (units of 2 pi / T) present in the H...H signal,
/// sorted, deduplicated, without 0. Built by sum/difference closure of each
/// plate's {f_m, 2 f_m}.
std::vector<int> harmonic_set(const ExperimentConfig& config);

/// Outcome strings are indexed with qubit 1 most significant, H = 0.
std::string outcome_label(std::size_t index, int n_qubits);
std::vector<std::string> outcome_labels(int n_qubits);

/// Tr[rho (M^{k1}(t) (x) ... (x) M^{kn}(t))].
double outcome_probability(const DensityMatrix& rho, const ExperimentConfig& config, double t,
                           std::span<const Outcome> outcomes);

/// All 2^n values Tr[op (M^{k1}(t) (x) ...)]; `op` need not be a state.
std::vector<double> outcome_distribution(const ComplexMatrix& op, const ExperimentConfig& config,
                                         double t);

/// H...H values of `op` at the N bin centres.
std::vector<double> ideal_signal(const ComplexMatrix& op, const ExperimentConfig& config);

enum class RecordKind { Probabilities, Counts };

/// Discretized detection record over exactly one period.
///
/// `table` is N x 2^n: exact probabilities for noiseless configs, integer
/// counts (stored as doubles) otherwise.
struct SignalRecord {
    ExperimentConfig config;
    std::vector<double> times;
    Eigen::MatrixXd table;
    RecordKind kind;
    double period;

    [[nodiscard]] int bins() const noexcept { return static_cast<int>(times.size()); }
};

/// multinomial(n, p) via conditional binomials; p is renormalized.
std::vector<std::int64_t> sample_multinomial(std::int64_t n, std::span<const double> p,
                                             std::mt19937_64& rng);

/// Independent stream for bin `index` of a run seeded with `seed`.
std::mt19937_64 bin_rng(std::uint64_t seed, std::uint64_t index);

SignalRecord synthesize(const DensityMatrix& rho, const ExperimentConfig& config);

/// Per-bin outcome frequencies (N x 2^n). Column 0 is the H...H signal.
Eigen::MatrixXd empirical_probabilities(const SignalRecord& rec);

/// Column 0 of empirical_probabilities.
std::vector<double> coincidence_signal(const SignalRecord& rec);

} // namespace fttomo
