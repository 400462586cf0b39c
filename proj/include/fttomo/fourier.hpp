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

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

namespace fttomo {

/// Trigonometric-series coefficients of one period sampled at bin centres
/// t_j = (j + 1/2) T / N:
///
///   x_j = a_0/2 + sum_{f=1}^{N/2-1} (a_f cos(f w t_j) + b_f sin(f w t_j))
///         + (b_{N/2}/2) sin(N/2 w t_j),          w = 2 pi / T.
///
/// With centred bins cos(N/2 w t_j) vanishes, so the Nyquist term lives in
/// b_{N/2}; a_{N/2} is identically zero. b_0 is always zero.
struct FourierSpectrum {
    std::vector<double> a;  // size N/2 + 1
    std::vector<double> b;  // size N/2 + 1
    double period = 1.0;

    [[nodiscard]] int samples() const noexcept { return 2 * (static_cast<int>(a.size()) - 1); }
    [[nodiscard]] int max_harmonic() const noexcept { return static_cast<int>(a.size()) - 1; }
    [[nodiscard]] double fundamental() const;
    /// Zero for harmonics outside 0..N/2.
    [[nodiscard]] double cos_coeff(int f) const;
    [[nodiscard]] double sin_coeff(int f) const;
};

/// Radix-2 FFT when N is a power of two, direct summation otherwise.
/// Throws ValidationError if N is odd or below 2.
FourierSpectrum analyze(std::span<const double> samples, double period);

/// O(N^2) direct evaluation of the coefficient sums.
FourierSpectrum analyze_direct(std::span<const double> samples, double period);

/// In-place iterative radix-2 transform, X_f = sum_j x_j exp(-2 pi i f j / N).
void fft_radix2(std::span<std::complex<double>> data);

/// Evaluates the series at arbitrary t.
double synthesize_from_spectrum(const FourierSpectrum& spec, double t);

/// CSV "f,a,b", one row per harmonic 0..N/2.
void write_spectrum_csv(std::ostream& os, const FourierSpectrum& spec);

} // namespace fttomo
