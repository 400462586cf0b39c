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

// Shared helpers and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace fttomo_test {

using cd = std::complex<double>;

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Pauli matrices written out entry by entry, {H, V} basis.
inline cd pauli_entry(int i, int r, int c) {
    static const std::array<std::array<cd, 4>, 4> table{{
        {cd(1), cd(0), cd(0), cd(1)},
        {cd(0), cd(1), cd(1), cd(0)},
        {cd(0), cd(0, -1), cd(0, 1), cd(0)},
        {cd(1), cd(0), cd(0), cd(-1)},
    }};
    return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * r + c)];
}

/// Element (r, c) of sigma_{i1} (x) ... (x) sigma_{in} by the product rule
/// over qubit bits (qubit 1 = most significant).
inline cd pauli_product_entry(const std::vector<int>& idx, int r, int c) {
    const int n = static_cast<int>(idx.size());
    cd v = 1.0;
    for (int q = 0; q < n; ++q) {
        const int rb = (r >> (n - 1 - q)) & 1;
        const int cb = (c >> (n - 1 - q)) & 1;
        v *= pauli_entry(idx[static_cast<std::size_t>(q)], rb, cb);
    }
    return v;
}

/// Brute-force Stokes vector: explicit double loop trace for each multi-index.
inline std::vector<double> brute_force_stokes(const Eigen::MatrixXcd& rho, int n) {
    const int dim = 1 << n;
    std::vector<double> out;
    for (int flat = 0; flat < (1 << (2 * n)); ++flat) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        int f = flat;
        for (int q = n - 1; q >= 0; --q) {
            idx[static_cast<std::size_t>(q)] = f % 4;
            f /= 4;
        }
        cd tr = 0.0;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                tr += rho(r, c) * pauli_product_entry(idx, c, r);
            }
        }
        out.push_back(tr.real());
    }
    return out;
}

/// Bloch vector of U^dagger sigma_3 U for U = exp(-i beta/2 n.sigma), by
/// Rodrigues rotation of z about n through -beta.
inline Eigen::Vector3d rodrigues_h_port(double beta, double phase) {
    const Eigen::Vector3d n(std::sin(phase), 0.0, std::cos(phase));
    const Eigen::Vector3d z(0, 0, 1);
    const double th = -beta;
    return z * std::cos(th) + n.cross(z) * std::sin(th) + n * n.dot(z) * (1 - std::cos(th));
}

/// Inline DFT coefficient sums at bin centres.
inline std::pair<double, double> dft_coefficient(const std::vector<double>& x, int f) {
    const int n = static_cast<int>(x.size());
    double a = 0, b = 0;
    for (int j = 0; j < n; ++j) {
        const double ph = 2 * M_PI * f * (j + 0.5) / n;
        a += x[static_cast<std::size_t>(j)] * std::cos(ph);
        b += x[static_cast<std::size_t>(j)] * std::sin(ph);
    }
    return {2.0 * a / n, 2.0 * b / n};
}

/// Fourier coefficients of the omega2 = 5 omega1, equal-beta H-H signal as
/// explicit linear forms in the Stokes parameters S[4 i + j]. b2 carries
/// s^2/4, as direct expansion of the product of chi functions gives.
struct TwoQubitClosedForm {
    double c, s;
    double S(const std::vector<double>& st, int i, int j) const {
        return st[static_cast<std::size_t>(4 * i + j)];
    }
    double a(const std::vector<double>& st, int f) const {
        const double c2 = c * c, s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
        switch (f) {
        case 0: return (c2 * (c2 * S(st, 3, 3) + S(st, 0, 3) + S(st, 3, 0)) + S(st, 0, 0)) / 2;
        case 2: return s2 * (c2 * S(st, 3, 3) + S(st, 3, 0)) / 4;
        case 3: return c * s3 * S(st, 1, 2) / 4;
        case 7: return -c * s3 * S(st, 1, 2) / 4;
        case 4: return c2 * s2 * S(st, 2, 2) / 2;
        case 6: return -c2 * s2 * S(st, 2, 2) / 2;
        case 8: return s4 * (S(st, 1, 1) + S(st, 3, 3)) / 8;
        case 9: return c * s3 * S(st, 2, 1) / 4;
        case 11: return -c * s3 * S(st, 2, 1) / 4;
        case 10: return s2 * (c2 * S(st, 3, 3) + S(st, 0, 3)) / 4;
        case 12: return s4 * (S(st, 3, 3) - S(st, 1, 1)) / 8;
        default: return 0.0;
        }
    }
    double b(const std::vector<double>& st, int f) const {
        const double c2 = c * c, s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
        switch (f) {
        case 1: return c * s * (c2 * S(st, 2, 3) + S(st, 2, 0)) / 2;
        case 2: return s2 * (c2 * S(st, 1, 3) + S(st, 1, 0)) / 4;
        case 3: return c * s3 * S(st, 3, 2) / 4;
        case 7: return c * s3 * S(st, 3, 2) / 4;
        case 5: return c * s * (c2 * S(st, 3, 2) + S(st, 0, 2)) / 2;
        case 8: return s4 * (S(st, 3, 1) - S(st, 1, 3)) / 8;
        case 9: return -c * s3 * S(st, 2, 3) / 4;
        case 11: return c * s3 * S(st, 2, 3) / 4;
        case 10: return s2 * (c2 * S(st, 3, 1) + S(st, 0, 1)) / 4;
        case 12: return s4 * (S(st, 1, 3) + S(st, 3, 1)) / 8;
        default: return 0.0;
        }
    }
};

/// The printed two-qubit reconstruction for (|HV> + |RL>)/sqrt2.
inline Eigen::Matrix4cd printed_two_qubit_matrix() {
    Eigen::Matrix4cd m;
    m << cd(0.125, 0), cd(0.25, 0.125), cd(0, -0.125), cd(0.125, 0),
         cd(0.25, -0.125), cd(0.625, 0), cd(-0.125, -0.25), cd(0.25, -0.125),
         cd(0, 0.125), cd(-0.125, 0.25), cd(0.125, 0), cd(0, 0.125),
         cd(0.125, 0), cd(0.25, 0.125), cd(0, -0.125), cd(0.125, 0);
    return m;
}

/// The printed single-qubit reconstruction (three decimals).
inline Eigen::Matrix2cd printed_one_qubit_matrix() {
    Eigen::Matrix2cd m;
    m << cd(0.5, 0), cd(-0.283, -0.283), cd(-0.283, 0.283), cd(0.5, 0);
    return m;
}

} // namespace fttomo_test
