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

#include "fttomo/quantum_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "fttomo/errors.hpp"

namespace fttomo {

namespace {

constexpr Complex kI{0.0, 1.0};

// Eigenvalues below this are treated as exact zeros before taking roots.
constexpr double kSqrtFloor = 1e-13;

std::array<Eigen::Matrix2cd, 4> make_paulis() {
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    // i(|V><H| - |H><V|)
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
    Eigen::VectorXd roots = es.eigenvalues().unaryExpr(
        [](double v) { return v < kSqrtFloor ? 0.0 : std::sqrt(v); });
    return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

// Euclidean projection onto {x : x_i >= 0, sum x_i = 1}.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
    std::vector<double> sorted(v.data(), v.data() + v.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double running = 0.0;
    double shift = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        running += sorted[k];
        const double candidate = (running - 1.0) / static_cast<double>(k + 1);
        if (sorted[k] - candidate > 0.0) {
            shift = candidate;
        }
    }
    return (v.array() - shift).cwiseMax(0.0).matrix();
}

} // namespace

namespace pauli {

const Eigen::Matrix2cd& sigma(int index) {
    static const std::array<Eigen::Matrix2cd, 4> paulis = make_paulis();
    if (index < 0 || index > 3) {
        throw ValidationError("Pauli index must be in 0..3, got " + std::to_string(index));
    }
    return paulis[static_cast<std::size_t>(index)];
}

} // namespace pauli

namespace ket {

StateVector H() { return StateVector{{1.0, 0.0}}; }
StateVector V() { return StateVector{{0.0, 1.0}}; }
StateVector D() { return StateVector{{M_SQRT1_2, M_SQRT1_2}}; }
StateVector A() { return StateVector{{M_SQRT1_2, -M_SQRT1_2}}; }
StateVector R() { return StateVector{{Complex(M_SQRT1_2), kI * M_SQRT1_2}}; }
StateVector L() { return StateVector{{Complex(M_SQRT1_2), -kI * M_SQRT1_2}}; }

} // namespace ket

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexMatrix pauli_product(std::span<const int> indices) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int idx : indices) {
        out = tensor(out, ComplexMatrix(pauli::sigma(idx)));
    }
    return out;
}

int register_dimension(int n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) {
        throw ValidationError("number of qubits must be in 1.." + std::to_string(kMaxQubits) +
                              ", got " + std::to_string(n_qubits));
    }
    return 1 << n_qubits;
}

int qubits_for_dimension(Eigen::Index dim) {
    for (int n = 1; n <= kMaxQubits; ++n) {
        if (dim == (Eigen::Index{1} << n)) {
            return n;
        }
    }
    throw ValidationError("matrix dimension " + std::to_string(dim) +
                          " is not 2^n for n in 1.." + std::to_string(kMaxQubits));
}

double hermiticity_error(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// --- DensityMatrix ---------------------------------------------------------

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) {
        throw ValidationError("density matrix must be square");
    }
    n_qubits_ = qubits_for_dimension(m.rows());
    const double herm = hermiticity_error(m);
    if (herm > tolerance) {
        throw ValidationError("density matrix is not Hermitian (max |rho - rho^dagger| = " +
                              std::to_string(herm) + ")");
    }
    matrix_ = (m + m.adjoint()) / 2.0;
    const double trace = matrix_.trace().real();
    if (std::abs(trace - 1.0) > tolerance) {
        throw ValidationError("density matrix trace is " + std::to_string(trace) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tolerance) {
        throw ValidationError("density matrix has negative eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()));
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ValidationError("state vector is not normalized (norm " + std::to_string(norm) + ")");
    }
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const int dim = register_dimension(n_qubits);
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

// --- StokesVector ----------------------------------------------------------

StokesVector::StokesVector(int n_qubits, std::vector<double> values)
    : n_qubits_(n_qubits), values_(std::move(values)) {
    const int dim = register_dimension(n_qubits);
    if (values_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw ValidationError("Stokes vector for " + std::to_string(n_qubits) + " qubits needs " +
                              std::to_string(dim * dim) + " entries, got " +
                              std::to_string(values_.size()));
    }
}

StokesVector StokesVector::zeros(int n_qubits) {
    const int dim = register_dimension(n_qubits);
    return StokesVector(n_qubits, std::vector<double>(static_cast<std::size_t>(dim * dim), 0.0));
}

std::size_t StokesVector::flat_index(std::span<const int> multi) {
    std::size_t flat = 0;
    for (int i : multi) {
        if (i < 0 || i > 3) {
            throw ValidationError("Stokes multi-index entries must be in 0..3");
        }
        flat = flat * 4 + static_cast<std::size_t>(i);
    }
    return flat;
}

std::vector<int> StokesVector::multi_index(std::size_t flat, int n_qubits) {
    std::vector<int> multi(static_cast<std::size_t>(n_qubits));
    for (int q = n_qubits - 1; q >= 0; --q) {
        multi[static_cast<std::size_t>(q)] = static_cast<int>(flat % 4);
        flat /= 4;
    }
    return multi;
}

double StokesVector::at(std::span<const int> multi) const {
    if (static_cast<int>(multi.size()) != n_qubits_) {
        throw ValidationError("multi-index length does not match qubit count");
    }
    return values_.at(flat_index(multi));
}

double StokesVector::at(std::initializer_list<int> multi) const {
    return at(std::span<const int>(multi.begin(), multi.size()));
}

// --- Pauli expansion --------------------------------------------------------

StokesVector stokes_decompose(const ComplexMatrix& op) {
    const int n = qubits_for_dimension(op.rows());
    StokesVector s = StokesVector::zeros(n);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const auto multi = StokesVector::multi_index(k, n);
        // Tr[op P] = sum_ij op_ij P_ji
        s[k] = (op.cwiseProduct(pauli_product(multi).transpose())).sum().real();
    }
    return s;
}

StokesVector stokes_decompose(const DensityMatrix& rho) { return stokes_decompose(rho.matrix()); }

ComplexMatrix stokes_compose(const StokesVector& s) {
    const int n = s.n_qubits();
    const int dim = register_dimension(n);
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != 0.0) {
            rho += s[k] * pauli_product(StokesVector::multi_index(k, n));
        }
    }
    return rho / static_cast<double>(dim);
}

// --- Metrics and channels ---------------------------------------------------

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("fidelity: dimension mismatch");
    }
    const ComplexMatrix root_a = psd_sqrt(a.matrix());
    ComplexMatrix inner = root_a * b.matrix() * root_a;
    inner = (inner + inner.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(inner, Eigen::EigenvaluesOnly);
    double trace_root = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = es.eigenvalues()(i);
        if (v > kSqrtFloor) {
            trace_root += std::sqrt(v);
        }
    }
    return std::clamp(trace_root * trace_root, 0.0, 1.0);
}

DensityMatrix dephase_z(const StateVector& psi, double d) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw ValidationError("dephasing parameter d must lie in [0, 1]");
    }
    const DensityMatrix pure = DensityMatrix::pure(psi);
    const int n = pure.n_qubits();
    const std::vector<int> all_z(static_cast<std::size_t>(n), 3);
    const ComplexMatrix z = pauli_product(all_z);
    return DensityMatrix(d * pure.matrix() + (1.0 - d) * z * pure.matrix() * z);
}

DensityMatrix project_physical(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("project_physical: matrix must be square");
    }
    const ComplexMatrix herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm);
    const Eigen::VectorXd clipped = project_to_simplex(es.eigenvalues());
    const ComplexMatrix out =
        es.eigenvectors() * clipped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    return DensityMatrix(out);
}

DensityMatrix random_ginibre_state(int n_qubits, std::mt19937_64& rng) {
    const int dim = register_dimension(n_qubits);
    std::normal_distribution<double> normal;
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        g.data()[i] = Complex(re, im);
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(rho);
}

StateVector random_pure_state(int n_qubits, std::mt19937_64& rng) {
    const int dim = register_dimension(n_qubits);
    std::normal_distribution<double> normal;
    StateVector psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        psi(i) = Complex(re, im);
    }
    return psi / psi.norm();
}

} // namespace fttomo
