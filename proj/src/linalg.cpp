// Copyright 2026 The liouvrec authors
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

#include "liouvrec/linalg.hpp"

#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace liouvrec {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("approx_equal: shape mismatch");
  }
  return max_abs(a - b) <= tol;
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_residual: matrix not square");
  }
  return max_abs(m - m.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix diff = a - b;
  diff = Complex(0.5) * (diff + diff.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(diff);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("trace_distance: eigensolver failed");
  }
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h,
                                           double hermiticity_tol) {
  const double herm = hermiticity_residual(h);
  if (herm > hermiticity_tol) {
    throw std::invalid_argument(
        "hermitian_eigensystem: input is not Hermitian (residual " +
        std::to_string(herm) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: solver did not converge");
  }
  HermitianEigensystem out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  out.residual = max_abs(h * out.vectors -
                         out.vectors * out.values.asDiagonal().toDenseMatrix()
                                           .cast<Complex>());
  return out;
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0.0;
  const double smin = sigma(sigma.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sigma(0) / smin;
}

std::vector<double> uniform_grid(double t0, double t1, int steps) {
  if (steps < 1) throw std::invalid_argument("uniform_grid: steps must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(steps) + 1);
  const double h = (t1 - t0) / steps;
  for (int i = 0; i <= steps; ++i) out[static_cast<std::size_t>(i)] = t0 + h * i;
  out.back() = t1;
  return out;
}

}  // namespace liouvrec
