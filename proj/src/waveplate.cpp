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

#include "fttomo/waveplate.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "fttomo/errors.hpp"
#include "fttomo/quantum_core.hpp"
#include "fttomo/text_format.hpp"

namespace fttomo {

void require_nonsingular_retardance(double beta) {
    if (!std::isfinite(beta)) {
        throw ValidationError("retardance must be finite");
    }
    const double turns = beta / M_PI;
    if (std::abs(turns - std::round(turns)) * M_PI < 1e-6) {
        throw ValidationError("retardance " + format_double(beta) +
                              " is a multiple of pi; the plate carries no sigma_1/sigma_2 information");
    }
}

WavePlate::WavePlate(double retardance, double omega, double phase0)
    : beta_(retardance), omega_(omega), phase0_(phase0) {
    require_nonsingular_retardance(retardance);
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ValidationError("wave-plate angular frequency must be positive");
    }
    if (!std::isfinite(phase0)) {
        throw ValidationError("wave-plate phase offset must be finite");
    }
}

WavePlate WavePlate::from_mechanical_rate(double retardance, double mechanical_rate, double phase0) {
    return WavePlate(retardance, 2.0 * mechanical_rate, phase0);
}

double WavePlate::rotation_period() const noexcept { return 2.0 * M_PI / omega_; }

Eigen::Vector3d rotation_axis(const WavePlate& wp, double t) {
    const double phase = wp.omega() * t + wp.phase0();
    return {std::sin(phase), 0.0, std::cos(phase)};
}

Eigen::Matrix2cd retarder_unitary(double beta, const Eigen::Vector3d& axis) {
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    Eigen::Matrix2cd axis_dot_sigma = axis.x() * pauli::sigma(1) + axis.y() * pauli::sigma(2) +
                                      axis.z() * pauli::sigma(3);
    return c * pauli::sigma(0) - Complex(0.0, s) * axis_dot_sigma;
}

Eigen::Matrix2cd unitary_at(const WavePlate& wp, double t) {
    return retarder_unitary(wp.retardance(), rotation_axis(wp, t));
}

Eigen::Matrix2cd projector(const WavePlate& wp, double t, Outcome a) {
    const Eigen::Matrix2cd u = unitary_at(wp, t);
    Eigen::Matrix2cd port = Eigen::Matrix2cd::Zero();
    port(static_cast<int>(a), static_cast<int>(a)) = 1.0;
    return u.adjoint() * port * u;
}

double chi(const WavePlate& wp, int index, double t) {
    const double c = std::cos(wp.retardance() / 2.0);
    const double s = std::sin(wp.retardance() / 2.0);
    const double phase = wp.omega() * t + wp.phase0();
    switch (index) {
    case 0:
        return 1.0;
    case 1:
        return s * s * std::sin(2.0 * phase);
    case 2:
        return 2.0 * c * s * std::sin(phase);
    case 3:
        return c * c + s * s * std::cos(2.0 * phase);
    default:
        throw ValidationError("chi index must be in 0..3, got " + std::to_string(index));
    }
}

std::vector<BlochSample> bloch_path(const WavePlate& wp, int samples) {
    if (samples < 2) {
        throw ValidationError("bloch_path needs at least 2 samples");
    }
    std::vector<BlochSample> path;
    path.reserve(static_cast<std::size_t>(samples));
    const double period = wp.rotation_period();
    for (int k = 0; k < samples; ++k) {
        const double t = period * static_cast<double>(k) / static_cast<double>(samples - 1);
        path.push_back({t, {chi(wp, 1, t), chi(wp, 2, t), chi(wp, 3, t)}});
    }
    return path;
}

void write_bloch_path_csv(std::ostream& os, const std::vector<BlochSample>& path) {
    os << "t,x,y,z\n";
    for (const auto& p : path) {
        os << format_double(p.t) << ',' << format_double(p.r.x()) << ','
           << format_double(p.r.y()) << ',' << format_double(p.r.z()) << '\n';
    }
}

} // namespace fttomo
