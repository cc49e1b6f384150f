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

#include "discord_lab/linalg.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace discord_lab {

namespace {

constexpr double kEigenInputHermitianTolerance = 1e-10;

std::string dim_string(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix pauli(int i) {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  switch (i) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -1.0i, 1.0i, 0.0; break;
    case 3: m << 1.0, 0.0, 0.0, -1.0; break;
    default:
      throw std::invalid_argument("pauli index must be 0..3, got " + std::to_string(i));
  }
  return m;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("kron expects square operands, got " + dim_string(a) + " and " +
                                dim_string(b));
  }
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  ComplexMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b;
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("eigenvalues_hermitian expects a square matrix, got " +
                                dim_string(m));
  }
  if (hermiticity_defect(m) > kEigenInputHermitianTolerance) {
    throw std::invalid_argument("eigenvalues_hermitian: matrix is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues_hermitian: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double shannon_entropy(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (double p : probabilities) s -= xlog2x(p);
  // -0.0 for an all-pure spectrum.
  return s == 0.0 ? 0.0 : s;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
    throw std::invalid_argument("density matrix must be 2x2 or 4x4, got " + dim_string(m_));
  }
  if (hermiticity_defect(m_) > kHermitianTolerance) {
    throw std::domain_error("density matrix is not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
    throw std::domain_error("density matrix trace is not 1");
  }
  const std::vector<double> ev = eigenvalues_hermitian(m_);
  if (ev.back() < -kPsdSlack) {
    throw std::domain_error("density matrix has a negative eigenvalue " + std::to_string(ev.back()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("partial_trace expects a 4x4 operator, got " + dim_string(m));
  }
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  // Index of |a b> is 2a + b.
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        out(r, c) += traced == Subsystem::A ? m(2 * k + r, 2 * k + c) : m(2 * r + k, 2 * c + k);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  return DensityMatrix(partial_trace(rho.matrix(), traced));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  // Slack-negative eigenvalues go to zero; renormalizing keeps a near-pure
  // spectrum such as (1 + 5e-11, -5e-11) from producing a negative entropy.
  std::vector<double> ev = eigenvalues_hermitian(rho.matrix());
  double sum = 0.0;
  for (double& x : ev) {
    x = std::max(x, 0.0);
    sum += x;
  }
  for (double& x : ev) x /= sum;
  return shannon_entropy(ev);
}

}  // namespace discord_lab
