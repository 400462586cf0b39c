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

#include "fttomo/fourier.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "fttomo/errors.hpp"
#include "fttomo/text_format.hpp"

namespace fttomo {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_even(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw ValidationError("Fourier analysis needs an even number of samples >= 2, got " +
                              std::to_string(n));
    }
}

void require_period(double period) {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw ValidationError("Fourier analysis needs a positive period");
    }
}

} // namespace

double FourierSpectrum::fundamental() const { return 2.0 * M_PI / period; }

double FourierSpectrum::cos_coeff(int f) const {
    return f >= 0 && f < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(f)] : 0.0;
}

double FourierSpectrum::sin_coeff(int f) const {
    return f >= 0 && f < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(f)] : 0.0;
}

void fft_radix2(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw ValidationError("radix-2 FFT needs a power-of-two length");
    }
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * M_PI / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> w = std::polar(1.0, angle * static_cast<double>(k));
                const std::complex<double> u = data[start + k];
                const std::complex<double> v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

FourierSpectrum analyze_direct(std::span<const double> samples, double period) {
    const std::size_t n = samples.size();
    require_even(n);
    require_period(period);
    const std::size_t half = n / 2;
    FourierSpectrum spec{std::vector<double>(half + 1, 0.0), std::vector<double>(half + 1, 0.0),
                         period};
    const double scale = 2.0 / static_cast<double>(n);
    for (std::size_t f = 0; f <= half; ++f) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double phase = 2.0 * M_PI * static_cast<double>(f) *
                                 (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            a += samples[j] * std::cos(phase);
            b += samples[j] * std::sin(phase);
        }
        spec.a[f] = scale * a;
        spec.b[f] = f == 0 ? 0.0 : scale * b;
    }
    return spec;
}

FourierSpectrum analyze(std::span<const double> samples, double period) {
    const std::size_t n = samples.size();
    require_even(n);
    require_period(period);
    if (!is_power_of_two(n)) {
        return analyze_direct(samples, period);
    }
    std::vector<std::complex<double>> work(samples.begin(), samples.end());
    fft_radix2(work);
    const std::size_t half = n / 2;
    FourierSpectrum spec{std::vector<double>(half + 1, 0.0), std::vector<double>(half + 1, 0.0),
                         period};
    const double scale = 2.0 / static_cast<double>(n);
    for (std::size_t f = 0; f <= half; ++f) {
        // Shift the sample origin from t = 0 to the first bin centre.
        const std::complex<double> centred =
            work[f] * std::polar(1.0, -M_PI * static_cast<double>(f) / static_cast<double>(n));
        spec.a[f] = scale * centred.real();
        spec.b[f] = f == 0 ? 0.0 : -scale * centred.imag();
    }
    return spec;
}

double synthesize_from_spectrum(const FourierSpectrum& spec, double t) {
    const double w = spec.fundamental();
    const int half = spec.max_harmonic();
    double v = spec.cos_coeff(0) / 2.0;
    for (int f = 1; f <= half; ++f) {
        const double weight = f == half ? 0.5 : 1.0;
        v += weight * (spec.cos_coeff(f) * std::cos(f * w * t) + spec.sin_coeff(f) * std::sin(f * w * t));
    }
    return v;
}

void write_spectrum_csv(std::ostream& os, const FourierSpectrum& spec) {
    os << "f,a,b\n";
    for (int f = 0; f <= spec.max_harmonic(); ++f) {
        os << f << ',' << format_double(spec.cos_coeff(f)) << ',' << format_double(spec.sin_coeff(f))
           << '\n';
    }
}

} // namespace fttomo
