// Copyright 2026 The discord_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace discord_lab {

using Complex = std::complex<double>;

/// Square complex matrix, row-major in the computational basis
/// |00>, |01>, |10>, |11> when it describes two qubits.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
/// Eigenvalues in [-kPsdSlack, 0) are treated as zero.
inline constexpr double kPsdSlack = 1e-10;

/// Identity for i = 0, Pauli x, y, z for i = 1, 2, 3.
/// Throws std::invalid_argument for any other index.
ComplexMatrix pauli(int i);

ComplexMatrix identity(int dim);

/// Kronecker product with the usual block layout: (a ⊗ b)[ia*db + ib][ja*db + jb] = a[ia][ja] b[ib][jb].
/// Throws std::invalid_argument if either operand is not square.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

/// Real eigenvalues of a Hermitian matrix in descending order.
/// Throws std::invalid_argument if m is not square or not Hermitian within 1e-10.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

/// Binary-log entropy -sum p log2 p of a probability list. 0 log 0 = 0;
/// entries in [-kPsdSlack, 0) are clamped to zero.
double shannon_entropy(const std::vector<double>& probabilities);

/// x log2 x with the continuous extension 0 at x = 0.
double xlog2x(double x);

enum class Subsystem { A, B };

/// Validated quantum state: Hermitian, unit trace, positive semidefinite up to kPsdSlack.
/// Dimension 2 (one qubit) or 4 (two qubits).
class DensityMatrix {
 public:
  /// Throws std::domain_error if any invariant fails, std::invalid_argument
  /// for a dimension other than 2 or 4.
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for a normalized state vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  Complex operator()(int r, int c) const { return m_(r, c); }

 private:
  ComplexMatrix m_;
};

/// Partial trace of an arbitrary 4x4 operator; returns the 2x2 operator on the
/// remaining qubit. Throws std::invalid_argument if m is not 4x4.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced);

/// Trace out `traced` from a two-qubit state, returning the one-qubit state of the
/// other subsystem. Throws std::invalid_argument if rho is not 4x4.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);

/// S(rho) = -Tr rho log2 rho, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace discord_lab
