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

#include "fttomo/presets.hpp"

namespace fttomo::presets {

StateVector one_qubit_psi() {
    return (ket::H() + std::polar(1.0, -M_PI / 4.0) * ket::V()) / std::sqrt(2.0);
}

DensityMatrix one_qubit_state(double d) { return dephase_z(one_qubit_psi(), d); }

StateVector two_qubit_psi() {
    return (tensor(ket::H(), ket::V()) + tensor(ket::R(), ket::L())) / std::sqrt(2.0);
}

DensityMatrix two_qubit_state() { return DensityMatrix::pure(two_qubit_psi()); }

ExperimentConfig one_qubit_config(int bins, std::int64_t shots, std::uint64_t seed) {
    return ExperimentConfig::single_qubit(kRetardance, bins, shots, seed);
}

ExperimentConfig two_qubit_config(int ratio, int bins, std::int64_t shots, std::uint64_t seed) {
    return ExperimentConfig::two_qubit_ratio(ratio, 1, kRetardance, bins, shots, seed);
}

} // namespace fttomo::presets
