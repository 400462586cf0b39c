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

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace fttomo {

/// Output port of the polarizing beam splitter.
enum class Outcome { H = 0, V = 1 };

/// A retarder rotating at constant rate.
///
/// `omega` is the Bloch-space angular frequency, twice the mechanical
/// rotation rate of the plate. The fast axis sits at `phase0` (Bloch-space
/// radians) at t = 0.
class WavePlate {
public:
    WavePlate(double retardance, double omega, double phase0 = 0.0);

    /// Builds a plate from its mechanical rotation rate Omega (omega = 2 Omega).
    static WavePlate from_mechanical_rate(double retardance, double mechanical_rate,
                                          double phase0 = 0.0);

    [[nodiscard]] double retardance() const noexcept { return beta_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] double phase0() const noexcept { return phase0_; }
    /// One full turn of the rotation axis, 2 pi / omega.
    [[nodiscard]] double rotation_period() const noexcept;

private:
    double beta_;
    double omega_;
    double phase0_;
};

/// Throws ValidationError when beta is within 1e-6 of a multiple of pi.
void require_nonsingular_retardance(double beta);

/// v(t) = cos(omega t + phase0) k + sin(omega t + phase0) i, as (x, y, z).
Eigen::Vector3d rotation_axis(const WavePlate& wp, double t);

/// cos(beta/2) sigma_0 - i sin(beta/2) axis . sigma, for any beta.
Eigen::Matrix2cd retarder_unitary(double beta, const Eigen::Vector3d& axis);

Eigen::Matrix2cd unitary_at(const WavePlate& wp, double t);

/// M^a(t) = U^dagger |a><a| U.
Eigen::Matrix2cd projector(const WavePlate& wp, double t, Outcome a);

/// chi_i(t) = Tr[sigma_i M^H(t)] from the closed forms
/// (1, s^2 sin 2wt, 2cs sin wt, c^2 + s^2 cos 2wt). The V port has
/// chi^V_0 = 1 and chi^V_i = -chi_i.
double chi(const WavePlate& wp, int index, double t);

/// Bloch vectors (chi_1, chi_2, chi_3) of M^H at `samples` evenly spaced
/// times covering [0, 2 pi / omega], both endpoints included.
struct BlochSample {
    double t;
    Eigen::Vector3d r;
};
std::vector<BlochSample> bloch_path(const WavePlate& wp, int samples);

/// CSV "t,x,y,z".
void write_bloch_path_csv(std::ostream& os, const std::vector<BlochSample>& path);

} // namespace fttomo
