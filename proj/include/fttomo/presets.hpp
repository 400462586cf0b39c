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

#include <cmath>

#include "fttomo/quantum_core.hpp"
#include "fttomo/signal_synth.hpp"

namespace fttomo::presets {

/// Retardance with the best single-plate noise immunity, 11 pi / 15.
inline constexpr double kRetardance = 11.0 * M_PI / 15.0;

/// (|H> + e^{-i pi/4} |V>) / sqrt2.
StateVector one_qubit_psi();
/// one_qubit_psi() under sigma_z dephasing with parameter d.
DensityMatrix one_qubit_state(double d = 0.1);
/// (|HV> + |RL>) / sqrt2.
StateVector two_qubit_psi();
DensityMatrix two_qubit_state();

ExperimentConfig one_qubit_config(int bins = 16, std::int64_t shots = 0, std::uint64_t seed = 0);
/// Two plates at omega2 = ratio * omega1, both at kRetardance.
ExperimentConfig two_qubit_config(int ratio = 5, int bins = 64, std::int64_t shots = 0,
                                  std::uint64_t seed = 0);

} // namespace fttomo::presets
