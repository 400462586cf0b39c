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

enum class BinSampling { Center, Edge };

/// N x 4 matrix W with W(j, i) = chi_i(t_j) / 2 over one plate period, so
/// that W S is the sampled single-qubit H-port probability.
Eigen::MatrixXd instrument_matrix(double retardance, int bins,
                                  BinSampling sampling = BinSampling::Center);

/// Equally weighted variance trace[(W^T W)^-1]. Throws ValidationError for a
/// singular retardance or N < 5, RankDeficientError if W lacks rank 4.
double ewv(double retardance, int bins);

struct EwvPoint {
    double beta;
    /// EWV * N; +inf where the instrument matrix is singular.
    double ewv_times_n;
};

struct EwvScan {
    std::vector<EwvPoint> points;
    /// Golden-section refined minimum near the best grid point.
    double beta_min = 0.0;
    double ewv_times_n_min = 0.0;
};

/// `steps` evenly spaced betas over [beta_min, beta_max] (a single point
/// when steps == 1, which needs beta_min == beta_max).
EwvScan ewv_scan(double beta_min, double beta_max, int steps, int bins);

/// CSV "beta,ewv_times_n".
void write_ewv_csv(std::ostream& os, const EwvScan& scan);

} // namespace fttomo
