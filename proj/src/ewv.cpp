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

#include "fttomo/ewv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "fttomo/errors.hpp"
#include "fttomo/text_format.hpp"
#include "fttomo/waveplate.hpp"

namespace fttomo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ewv_times_n_or_inf(double beta, int bins) {
    try {
        return ewv(beta, bins) * bins;
    } catch (const ValidationError&) {
        return kInf;
    } catch (const RankDeficientError&) {
        return kInf;
    }
}

} // namespace

Eigen::MatrixXd instrument_matrix(double retardance, int bins, BinSampling sampling) {
    if (bins < 5) {
        throw ValidationError("instrument matrix needs at least 5 bins per period (Nyquist for "
                              "harmonic 2), got " + std::to_string(bins));
    }
    const WavePlate wp(retardance, 2.0 * M_PI);
    const double offset = sampling == BinSampling::Center ? 0.5 : 0.0;
    Eigen::MatrixXd w(bins, 4);
    for (int j = 0; j < bins; ++j) {
        const double t = (j + offset) / static_cast<double>(bins);
        for (int i = 0; i < 4; ++i) {
            w(j, i) = chi(wp, i, t) / 2.0;
        }
    }
    return w;
}

double ewv(double retardance, int bins) {
    const Eigen::MatrixXd w = instrument_matrix(retardance, bins);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(w);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * sv(0)) {
        throw RankDeficientError("instrument matrix is rank-deficient at beta = " +
                                 format_double(retardance));
    }
    // trace[(W^T W)^-1] = sum 1/sigma_i^2
    return (1.0 / sv.array().square()).sum();
}

EwvScan ewv_scan(double beta_min, double beta_max, int steps, int bins) {
    if (steps < 1 || !(beta_max >= beta_min) || (steps == 1) != (beta_min == beta_max) ||
        !std::isfinite(beta_min) || !std::isfinite(beta_max)) {
        throw ValidationError("degenerate beta scan: need beta_min < beta_max with steps >= 2, "
                              "or beta_min == beta_max with steps == 1");
    }
    if (bins < 5) {
        throw ValidationError("EWV scan needs at least 5 bins per period");
    }
    EwvScan scan;
    scan.points.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double beta =
            steps == 1 ? beta_min : beta_min + (beta_max - beta_min) * k / (steps - 1.0);
        scan.points.push_back({beta, ewv_times_n_or_inf(beta, bins)});
    }
    const auto best = std::min_element(
        scan.points.begin(), scan.points.end(),
        [](const EwvPoint& x, const EwvPoint& y) { return x.ewv_times_n < y.ewv_times_n; });
    scan.beta_min = best->beta;
    scan.ewv_times_n_min = best->ewv_times_n;
    if (steps < 3 || !std::isfinite(best->ewv_times_n)) {
        return scan;
    }

    const auto idx = static_cast<std::size_t>(best - scan.points.begin());
    double lo = scan.points[idx == 0 ? 0 : idx - 1].beta;
    double hi = scan.points[std::min(idx + 1, scan.points.size() - 1)].beta;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = ewv_times_n_or_inf(x1, bins);
    double f2 = ewv_times_n_or_inf(x2, bins);
    for (int it = 0; it < 100 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = ewv_times_n_or_inf(x1, bins);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = ewv_times_n_or_inf(x2, bins);
        }
    }
    const double refined = (lo + hi) / 2.0;
    const double refined_value = ewv_times_n_or_inf(refined, bins);
    if (refined_value < scan.ewv_times_n_min) {
        scan.beta_min = refined;
        scan.ewv_times_n_min = refined_value;
    }
    return scan;
}

void write_ewv_csv(std::ostream& os, const EwvScan& scan) {
    os << "beta,ewv_times_n\n";
    for (const auto& p : scan.points) {
        os << format_double(p.beta) << ',' << format_double(p.ewv_times_n) << '\n';
    }
}

} // namespace fttomo
