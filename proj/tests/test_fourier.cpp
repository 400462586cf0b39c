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

#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "fttomo/errors.hpp"
#include "fttomo/fourier.hpp"
#include "fttomo/presets.hpp"
#include "fttomo/signal_synth.hpp"
#include "test_support.hpp"

using namespace fttomo;

namespace {

std::vector<double> sampled(int n, double period, const std::function<double(double)>& f) {
    std::vector<double> x;
    for (int j = 0; j < n; ++j) {
        x.push_back(f((j + 0.5) * period / n));
    }
    return x;
}

std::vector<double> random_band_limited(int n, int fmax, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<double> a(static_cast<std::size_t>(fmax + 1)), b(a.size());
    for (auto& v : a) v = g(rng);
    for (auto& v : b) v = g(rng);
    return sampled(n, 1.0, [&](double t) {
        double s = a[0] / 2;
        for (int f = 1; f <= fmax; ++f) {
            s += a[static_cast<std::size_t>(f)] * std::cos(2 * M_PI * f * t) +
                 b[static_cast<std::size_t>(f)] * std::sin(2 * M_PI * f * t);
        }
        return s;
    });
}

} // namespace

TEST_CASE("constant signal") {
    const std::vector<double> x(16, 0.5);
    const auto spec = analyze(x, 1.0);
    CHECK(spec.a[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (int f = 1; f <= 8; ++f) {
        CHECK(std::abs(spec.cos_coeff(f)) < 1e-15);
        CHECK(std::abs(spec.sin_coeff(f)) < 1e-15);
    }
    CHECK(spec.max_harmonic() == 8);
    CHECK(spec.samples() == 16);
    CHECK(spec.fundamental() == doctest::Approx(2 * M_PI));
}

TEST_CASE("pure sine has a positive b1") {
    const auto x = sampled(16, 2.0, [](double t) { return 0.3 * std::sin(M_PI * t); });
    const auto spec = analyze(x, 2.0);
    CHECK(std::abs(spec.sin_coeff(1) - 0.3) < 1e-12);
    for (int f = 0; f <= 8; ++f) {
        CHECK(std::abs(spec.cos_coeff(f)) < 1e-12);
        if (f != 1) {
            CHECK(std::abs(spec.sin_coeff(f)) < 1e-12);
        }
    }
}

TEST_CASE("single-qubit example coefficients") {
    const auto rec = synthesize(presets::one_qubit_state(0.1), presets::one_qubit_config());
    const auto spec = analyze(coincidence_signal(rec), rec.period);
    CHECK(spec.cos_coeff(0) == doctest::Approx(1.0).epsilon(5e-4));
    CHECK(std::abs(spec.sin_coeff(1) - 0.210) < 5e-4);
    CHECK(std::abs(spec.cos_coeff(2)) < 5e-4);
    CHECK(std::abs(spec.sin_coeff(2) + 0.236) < 5e-4);
    CHECK(std::abs(spec.cos_coeff(1)) < 1e-12);
    for (int f = 3; f <= 8; ++f) {
        CHECK(std::abs(spec.cos_coeff(f)) < 1e-10);
        CHECK(std::abs(spec.sin_coeff(f)) < 1e-10);
    }
}

TEST_CASE("FFT path agrees with the direct sums and the inline oracle") {
    std::mt19937_64 rng(20);
    std::normal_distribution<double> g;
    for (int n : {2, 4, 8, 16, 64, 256}) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = g(rng);
        const auto fast = analyze(x, 1.0);
        const auto slow = analyze_direct(x, 1.0);
        for (int f = 0; f <= n / 2; ++f) {
            CHECK(std::abs(fast.cos_coeff(f) - slow.cos_coeff(f)) < 1e-12);
            CHECK(std::abs(fast.sin_coeff(f) - slow.sin_coeff(f)) < 1e-12);
            const auto [a, b] = fttomo_test::dft_coefficient(x, f);
            CHECK(std::abs(slow.cos_coeff(f) - a) < 1e-12);
            CHECK(std::abs(slow.sin_coeff(f) - (f == 0 ? 0.0 : b)) < 1e-12);
        }
    }
    // Non power of two falls back to the direct evaluation.
    std::vector<double> y(12);
    for (auto& v : y) v = g(rng);
    const auto spec = analyze(y, 1.0);
    for (int f = 0; f <= 6; ++f) {
        const auto [a, b] = fttomo_test::dft_coefficient(y, f);
        CHECK(std::abs(spec.cos_coeff(f) - a) < 1e-12);
        CHECK(std::abs(spec.sin_coeff(f) - b) < 1e-12);
    }
}

TEST_CASE("fft_radix2 matches a direct DFT") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> data(32);
    for (auto& v : data) v = {g(rng), g(rng)};
    const auto original = data;
    fft_radix2(data);
    for (int f = 0; f < 32; ++f) {
        std::complex<double> sum = 0;
        for (int j = 0; j < 32; ++j) {
            sum += original[static_cast<std::size_t>(j)] * std::polar(1.0, -2 * M_PI * f * j / 32);
        }
        CHECK(std::abs(sum - data[static_cast<std::size_t>(f)]) < 1e-12);
    }
    std::vector<std::complex<double>> bad(6);
    CHECK_THROWS_AS(fft_radix2(bad), ValidationError);
}

TEST_CASE("Parseval") {
    std::mt19937_64 rng(22);
    std::normal_distribution<double> g;
    for (int n : {16, 64, 24}) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = g(rng);
        const auto spec = analyze(x, 1.0);
        double energy = spec.a[0] * spec.a[0] / 2;
        for (int f = 1; f < n / 2; ++f) {
            energy += spec.a[static_cast<std::size_t>(f)] * spec.a[static_cast<std::size_t>(f)] +
                      spec.b[static_cast<std::size_t>(f)] * spec.b[static_cast<std::size_t>(f)];
        }
        energy += spec.b[static_cast<std::size_t>(n / 2)] * spec.b[static_cast<std::size_t>(n / 2)] / 2;
        double sumsq = 0;
        for (double v : x) sumsq += v * v;
        CHECK(std::abs(energy * n / 2 - sumsq) < 1e-9);
    }
}

TEST_CASE("linearity") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    std::vector<double> x(64), y(64), z(64);
    for (auto& v : x) v = g(rng);
    for (auto& v : y) v = g(rng);
    const double alpha = 0.7, beta = -2.3;
    for (std::size_t j = 0; j < 64; ++j) z[j] = alpha * x[j] + beta * y[j];
    const auto sx = analyze(x, 1.0), sy = analyze(y, 1.0), sz = analyze(z, 1.0);
    for (int f = 0; f <= 32; ++f) {
        CHECK(std::abs(sz.cos_coeff(f) - alpha * sx.cos_coeff(f) - beta * sy.cos_coeff(f)) < 1e-12);
        CHECK(std::abs(sz.sin_coeff(f) - alpha * sx.sin_coeff(f) - beta * sy.sin_coeff(f)) < 1e-12);
    }
}

TEST_CASE("synthesize_from_spectrum") {
    FourierSpectrum dc{{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, 1.0};
    CHECK(synthesize_from_spectrum(dc, 0.37) == doctest::Approx(0.5));

    FourierSpectrum ex{{1, 0, 0, 0, 0}, {0, 0.21, -0.236, 0, 0}, 1.0};
    CHECK(synthesize_from_spectrum(ex, 0.0) == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937_64 rng(24);
    for (int n : {16, 64, 20}) {
        for (int k = 0; k < 20; ++k) {
            const auto x = random_band_limited(n, n / 2 - 1, rng);
            const auto spec = analyze(x, 1.0);
            for (int j = 0; j < n; ++j) {
                REQUIRE(std::abs(synthesize_from_spectrum(spec, (j + 0.5) / n) -
                                 x[static_cast<std::size_t>(j)]) < 1e-10);
            }
        }
        // Arbitrary data, Nyquist term included.
        std::normal_distribution<double> g;
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = g(rng);
        const auto spec = analyze(x, 3.0);
        for (int j = 0; j < n; ++j) {
            CHECK(std::abs(synthesize_from_spectrum(spec, (j + 0.5) * 3.0 / n) -
                           x[static_cast<std::size_t>(j)]) < 1e-10);
        }
    }
}

TEST_CASE("analyze input validation") {
    const std::vector<double> odd(15, 0.1);
    CHECK_THROWS_AS(analyze(odd, 1.0), ValidationError);
    const std::vector<double> one(1, 0.1);
    CHECK_THROWS_AS(analyze(one, 1.0), ValidationError);
    const std::vector<double> ok(4, 0.1);
    CHECK_THROWS_AS(analyze(ok, 0.0), ValidationError);
}

TEST_CASE("spectrum CSV") {
    const std::vector<double> x(4, 0.5);
    std::ostringstream os;
    write_spectrum_csv(os, analyze(x, 1.0));
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "f,a,b");
    std::getline(is, line);
    CHECK(line == "0,1,0");
    int rows = 1;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 3);
}
