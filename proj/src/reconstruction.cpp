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

#include "fttomo/reconstruction.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fttomo/errors.hpp"
#include "fttomo/waveplate.hpp"

namespace fttomo {

std::string CoefficientLabel::str() const {
    return (kind == Kind::Cos ? "a" : "b") + std::to_string(harmonic);
}

int TransferMatrix::row_of(CoefficientLabel label) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] == label) {
            return static_cast<int>(r);
        }
    }
    return -1;
}

double TransferMatrix::entry(CoefficientLabel label, std::size_t stokes_index) const {
    const int r = row_of(label);
    return r < 0 ? 0.0 : matrix(r, static_cast<Eigen::Index>(stokes_index));
}

TransferMatrix build_transfer_matrix(const ExperimentConfig& config) {
    const int n = config.n_qubits();
    const int dim = register_dimension(n);
    const auto harmonics = harmonic_set(config);

    TransferMatrix tm;
    tm.n_qubits = n;
    tm.rows.push_back({CoefficientLabel::Kind::Cos, 0});
    for (int f : harmonics) {
        tm.rows.push_back({CoefficientLabel::Kind::Cos, f});
        tm.rows.push_back({CoefficientLabel::Kind::Sin, f});
    }
    const auto columns = static_cast<Eigen::Index>(dim) * dim;
    tm.matrix.resize(static_cast<Eigen::Index>(tm.rows.size()), columns);

    // By linearity of the signal in rho, feeding sigma_k / 2^n through the
    // forward model yields column k.
    for (Eigen::Index k = 0; k < columns; ++k) {
        const auto multi = StokesVector::multi_index(static_cast<std::size_t>(k), n);
        const ComplexMatrix basis_op = pauli_product(multi) / static_cast<double>(dim);
        const auto signal = ideal_signal(basis_op, config);
        const FourierSpectrum spec = analyze(signal, config.period());
        for (std::size_t r = 0; r < tm.rows.size(); ++r) {
            const auto& label = tm.rows[r];
            tm.matrix(static_cast<Eigen::Index>(r), k) = label.kind == CoefficientLabel::Kind::Cos
                                                             ? spec.cos_coeff(label.harmonic)
                                                             : spec.sin_coeff(label.harmonic);
        }
    }
    return tm;
}

IdentifiabilityReport check_identifiability(const TransferMatrix& tm) {
    IdentifiabilityReport report;
    report.unknowns = static_cast<int>(tm.matrix.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(tm.matrix);
    const Eigen::VectorXd sv = svd.singularValues();
    report.singular_values.assign(sv.data(), sv.data() + sv.size());
    // Fewer rows than columns leaves implicit zero singular values.
    report.singular_values.resize(static_cast<std::size_t>(report.unknowns), 0.0);
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    for (double s : report.singular_values) {
        if (s > kRankTolerance * sigma_max) {
            ++report.rank;
        }
    }
    report.condition_number = report.identifiable()
                                  ? sigma_max / report.singular_values.back()
                                  : std::numeric_limits<double>::infinity();
    return report;
}

Eigen::VectorXd coefficient_vector(const FourierSpectrum& spec, const TransferMatrix& tm) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(tm.rows.size()));
    for (std::size_t r = 0; r < tm.rows.size(); ++r) {
        const auto& label = tm.rows[r];
        if (label.harmonic > spec.max_harmonic() ||
            (label.harmonic == spec.max_harmonic() && label.harmonic > 0)) {
            throw ValidationError("spectrum resolves harmonics up to " +
                                  std::to_string(spec.max_harmonic() - 1) + " but the transfer "
                                  "matrix needs " + label.str());
        }
        y(static_cast<Eigen::Index>(r)) = label.kind == CoefficientLabel::Kind::Cos
                                              ? spec.cos_coeff(label.harmonic)
                                              : spec.sin_coeff(label.harmonic);
    }
    return y;
}

StokesVector invert_generic(const FourierSpectrum& spec, const TransferMatrix& tm) {
    const auto report = check_identifiability(tm);
    if (!report.identifiable()) {
        throw RankDeficientError("transfer matrix has rank " + std::to_string(report.rank) +
                                 " < " + std::to_string(report.unknowns) +
                                 "; this configuration cannot identify every Stokes parameter");
    }
    const Eigen::VectorXd y = coefficient_vector(spec, tm);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(tm.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankTolerance);
    const Eigen::VectorXd s = svd.solve(y);
    return StokesVector(tm.n_qubits, {s.data(), s.data() + s.size()});
}

StokesVector invert_1q(const FourierSpectrum& spec, double retardance) {
    require_nonsingular_retardance(retardance);
    if (spec.max_harmonic() <= 2) {
        throw ValidationError("single-qubit inversion needs harmonics 1 and 2 below Nyquist");
    }
    const double c = std::cos(retardance / 2.0);
    const double s = std::sin(retardance / 2.0);
    const double a0 = spec.cos_coeff(0);
    const double a2 = spec.cos_coeff(2);
    const double b1 = spec.sin_coeff(1);
    const double b2 = spec.sin_coeff(2);
    return StokesVector(1, {a0 - 2.0 * a2 * c * c / (s * s), 2.0 * b2 / (s * s), b1 / (c * s),
                            2.0 * a2 / (s * s)});
}

StokesVector invert_2q(const FourierSpectrum& spec, double retardance1, double retardance2) {
    require_nonsingular_retardance(retardance1);
    require_nonsingular_retardance(retardance2);
    if (std::abs(retardance1 - retardance2) > 1e-12) {
        throw ValidationError("closed-form two-qubit inversion assumes equal retardances; "
                              "use invert_generic for distinct plates");
    }
    if (spec.max_harmonic() <= 12) {
        throw ValidationError("two-qubit inversion (ratio 5) needs harmonics 1..12 below Nyquist, "
                              "spectrum has " + std::to_string(spec.max_harmonic() - 1));
    }
    const double c = std::cos(retardance1 / 2.0);
    const double s = std::sin(retardance1 / 2.0);
    const double c2 = c * c;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s2 * s2;
    auto a = [&](int f) { return spec.cos_coeff(f); };
    auto b = [&](int f) { return spec.sin_coeff(f); };

    StokesVector out = StokesVector::zeros(2);
    auto set = [&](int i, int j, double v) { out[static_cast<std::size_t>(4 * i + j)] = v; };

    const double s33 = 4.0 * (a(8) + a(12)) / s4;
    const double s31 = 4.0 * (b(8) + b(12)) / s4;
    const double s13 = -4.0 * (b(8) - b(12)) / s4;
    const double s12 = 2.0 * (a(3) - a(7)) / (c * s3);
    const double s21 = 2.0 * (a(9) - a(11)) / (c * s3);
    const double s22 = (a(4) - a(6)) / (c2 * s2);
    const double s32 = 2.0 * (b(3) + b(7)) / (c * s3);
    const double s23 = -2.0 * (b(9) - b(11)) / (c * s3);

    set(0, 0, 2.0 * a(0) - 4.0 * c2 * (a(2) + a(10)) / s2 + c2 * c2 * s33);
    set(0, 1, 4.0 * b(10) / s2 - c2 * s31);
    set(0, 2, 2.0 * b(5) / (c * s) - c2 * s32);
    set(0, 3, 4.0 * a(10) / s2 - c2 * s33);
    set(1, 0, 4.0 * b(2) / s2 - c2 * s13);
    set(1, 1, 4.0 * (a(8) - a(12)) / s4);
    set(1, 2, s12);
    set(1, 3, s13);
    set(2, 0, 2.0 * b(1) / (c * s) - c2 * s23);
    set(2, 1, s21);
    set(2, 2, s22);
    set(2, 3, s23);
    set(3, 0, 4.0 * a(2) / s2 - c2 * s33);
    set(3, 1, s31);
    set(3, 2, s32);
    set(3, 3, s33);
    return out;
}

Reconstruction reconstruct(const SignalRecord& rec, const ReconstructOptions& options) {
    const auto& config = rec.config;
    if (rec.bins() != config.bins_per_period() ||
        rec.table.rows() != config.bins_per_period()) {
        throw ValidationError("record must contain exactly one period of " +
                              std::to_string(config.bins_per_period()) + " bins");
    }
    const auto signal = coincidence_signal(rec);
    const TransferMatrix tm = build_transfer_matrix(config);
    const auto report = check_identifiability(tm);

    Reconstruction out{StokesVector{}, {}, std::nullopt, analyze(signal, rec.period),
                       report.condition_number};
    out.stokes = invert_generic(out.spectrum, tm);

    const bool renormalize =
        options.normalization == Normalization::Always ||
        (options.normalization == Normalization::Auto && rec.kind == RecordKind::Counts);
    if (renormalize) {
        const double s0 = out.stokes[0];
        if (!(std::abs(s0) > 0.0)) {
            throw ValidationError("cannot renormalize: estimated S_0..0 is zero");
        }
        for (std::size_t k = 0; k < out.stokes.size(); ++k) {
            out.stokes[k] /= s0;
        }
    }
    out.rho_raw = stokes_compose(out.stokes);
    if (options.physical) {
        out.rho_physical = project_physical(out.rho_raw);
    }
    return out;
}

} // namespace fttomo
