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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fttomo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest register handled; transfer matrices are 4^n columns wide.
inline constexpr int kMaxQubits = 4;

namespace pauli {

/// sigma_0..sigma_3 in the {H, V} basis.
const Eigen::Matrix2cd& sigma(int index);

} // namespace pauli

/// Polarization basis kets. Circular states use |R> = (|H> + i|V>)/sqrt2.
namespace ket {
StateVector H();
StateVector V();
StateVector D();
StateVector A();
StateVector R();
StateVector L();
} // namespace ket

/// Kronecker product a (x) b; a's index is the more significant one.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// sigma_{i1} (x) ... (x) sigma_{in}.
ComplexMatrix pauli_product(std::span<const int> indices);

/// Computes 2^n for n in [0, kMaxQubits]; throws otherwise.
int register_dimension(int n_qubits);

/// Infers n from a 2^n dimension, throws if dim is not a supported power of two.
int qubits_for_dimension(Eigen::Index dim);

/// Hermitian, unit-trace, positive semidefinite matrix on n qubits.
///
/// Construction validates within `tolerance` and then stores the exactly
/// Hermitian part (m + m^dagger)/2.
class DensityMatrix {
public:
    static constexpr double kDefaultTolerance = 1e-10;

    explicit DensityMatrix(const ComplexMatrix& m, double tolerance = kDefaultTolerance);

    static DensityMatrix pure(const StateVector& psi);
    static DensityMatrix maximally_mixed(int n_qubits);

    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] Complex operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

private:
    ComplexMatrix matrix_;
    int n_qubits_ = 0;
};

/// Real coefficients of the tensor-Pauli expansion, flat-indexed with the
/// first qubit's Pauli index most significant (base 4).
class StokesVector {
public:
    StokesVector() = default;
    StokesVector(int n_qubits, std::vector<double> values);
    static StokesVector zeros(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

    double& operator[](std::size_t flat) { return values_[flat]; }
    double operator[](std::size_t flat) const { return values_[flat]; }

    /// Access by multi-index (i1, ..., in).
    [[nodiscard]] double at(std::span<const int> multi) const;
    [[nodiscard]] double at(std::initializer_list<int> multi) const;

    static std::size_t flat_index(std::span<const int> multi);
    static std::vector<int> multi_index(std::size_t flat, int n_qubits);

private:
    int n_qubits_ = 0;
    std::vector<double> values_;
};

/// S_{i1..in} = Tr[rho (sigma_{i1} (x) ... (x) sigma_{in})].
///
/// The ComplexMatrix overload accepts arbitrary 2^n operators (used for the
/// basis operators of the transfer matrix and for raw estimates).
StokesVector stokes_decompose(const DensityMatrix& rho);
StokesVector stokes_decompose(const ComplexMatrix& op);

/// rho = 2^-n sum S_{i..} sigma_{i1} (x) ... (x) sigma_{in}.
ComplexMatrix stokes_compose(const StokesVector& s);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// d |psi><psi| + (1 - d) sigma_z |psi><psi| sigma_z, with sigma_z on every qubit.
DensityMatrix dephase_z(const StateVector& psi, double d);

/// Frobenius-nearest unit-trace PSD matrix: eigenvalues are projected onto
/// the probability simplex. Non-Hermitian input is symmetrized first.
DensityMatrix project_physical(const ComplexMatrix& m);

/// Ginibre-ensemble random state, rho = G G^dagger / Tr[G G^dagger].
DensityMatrix random_ginibre_state(int n_qubits, std::mt19937_64& rng);

/// Haar-random pure state vector.
StateVector random_pure_state(int n_qubits, std::mt19937_64& rng);

/// Largest entrywise |m - m^dagger|.
double hermiticity_error(const ComplexMatrix& m);

} // namespace fttomo
