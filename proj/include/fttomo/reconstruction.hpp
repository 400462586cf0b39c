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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fttomo/fourier.hpp"
#include "fttomo/quantum_core.hpp"
#include "fttomo/signal_synth.hpp"

namespace fttomo {

/// Identifies one Fourier coefficient: cosine (a) or sine (b) at harmonic f.
struct CoefficientLabel {
    enum class Kind { Cos, Sin };
    Kind kind;
    int harmonic;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const CoefficientLabel&, const CoefficientLabel&) = default;
};

/// State-independent linear map from Stokes parameters to the Fourier
/// coefficients of the H...H signal. Rows cover a_0 and (a_f, b_f) for every
/// f in harmonic_set(config); columns follow StokesVector's flat order.
struct TransferMatrix {
    int n_qubits = 0;
    Eigen::MatrixXd matrix;
    std::vector<CoefficientLabel> rows;

    /// Row index for a label, or -1.
    [[nodiscard]] int row_of(CoefficientLabel label) const;
    /// Entry for (label, flat Stokes index); 0 for absent rows.
    [[nodiscard]] double entry(CoefficientLabel label, std::size_t stokes_index) const;
};

TransferMatrix build_transfer_matrix(const ExperimentConfig& config);

struct IdentifiabilityReport {
    int rank = 0;
    int unknowns = 0;
    /// sigma_max / sigma_min over all 4^n singular values; infinite when rank-deficient.
    double condition_number = 0.0;
    std::vector<double> singular_values;

    [[nodiscard]] bool identifiable() const noexcept { return rank == unknowns; }
};

/// Relative singular-value cutoff used for the numerical rank.
inline constexpr double kRankTolerance = 1e-10;

IdentifiabilityReport check_identifiability(const TransferMatrix& tm);

/// Coefficients of `spec` in the row order of `tm`.
Eigen::VectorXd coefficient_vector(const FourierSpectrum& spec, const TransferMatrix& tm);

/// Least-squares Stokes estimate; throws RankDeficientError unless the
/// transfer matrix has full column rank.
StokesVector invert_generic(const FourierSpectrum& spec, const TransferMatrix& tm);

/// Closed-form single-plate inversion:
/// S0 = a0 - 2 a2 c^2/s^2, S1 = 2 b2/s^2, S2 = b1/(cs), S3 = 2 a2/s^2.
StokesVector invert_1q(const FourierSpectrum& spec, double retardance);

/// Closed-form two-plate inversion for omega2 = 5 omega1 and equal
/// retardance. Redundant readings (a3/-a7, a4/-a6, a9/-a11, b3/b7,
/// b9/-b11) are averaged.
StokesVector invert_2q(const FourierSpectrum& spec, double retardance1, double retardance2);

/// Whether to divide the Stokes estimate by its S_{0..0} entry.
enum class Normalization { Auto, Always, Never };

struct ReconstructOptions {
    bool physical = false;
    /// Auto renormalizes noisy (count) records only.
    Normalization normalization = Normalization::Auto;
};

struct Reconstruction {
    StokesVector stokes;
    ComplexMatrix rho_raw;
    std::optional<DensityMatrix> rho_physical;
    FourierSpectrum spectrum;
    double condition_number = 0.0;
};

/// empirical_probabilities -> analyze -> invert_generic -> stokes_compose,
/// optionally followed by project_physical.
Reconstruction reconstruct(const SignalRecord& rec, const ReconstructOptions& options = {});

} // namespace fttomo
