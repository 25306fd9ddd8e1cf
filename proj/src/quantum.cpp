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

#include "liouvrec/quantum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace liouvrec {

namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  }
  const double trace_err = std::abs(m_.trace() - Complex(1.0));
  if (trace_err > tol.trace) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                describe(trace_err));
  }
  const double herm = hermiticity_residual(m_);
  if (herm > tol.hermiticity) {
    throw std::invalid_argument("DensityMatrix: hermiticity residual " + describe(herm));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      (Complex(0.5) * (m_ + m_.adjoint().eval())).eval(),
      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("DensityMatrix: eigensolver failed");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol.eigenvalue_floor) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " + describe(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, const Tolerances& tol) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  ComplexVector unit = psi / norm;
  return DensityMatrix((unit * unit.adjoint()).eval(), tol);
}

HamiltonianModel make_hamiltonian_model(Index dim_s, Index dim_e, ComplexMatrix h_total) {
  if (dim_s < 1 || dim_e < 1) {
    throw std::invalid_argument("make_hamiltonian_model: dimensions must be positive");
  }
  const Index dim = dim_s * dim_e;
  if (h_total.rows() != dim || h_total.cols() != dim) {
    throw std::invalid_argument("make_hamiltonian_model: H is " +
                                std::to_string(h_total.rows()) + "x" +
                                std::to_string(h_total.cols()) + ", expected " +
                                std::to_string(dim) + "x" + std::to_string(dim));
  }
  const double scale = std::max(1.0, max_abs(h_total));
  if (hermiticity_residual(h_total) > 1e-10 * scale) {
    throw std::invalid_argument("make_hamiltonian_model: H is not Hermitian");
  }
  return HamiltonianModel{dim_s, dim_e, std::move(h_total)};
}

ComplexMatrix partial_trace_linear(const ComplexMatrix& op, Index dim_s, Index dim_e,
                                   Subsystem keep) {
  const Index dim = dim_s * dim_e;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument("partial_trace: operator dimension " +
                                std::to_string(op.rows()) + " != dim_s * dim_e = " +
                                std::to_string(dim));
  }
  if (keep == Subsystem::system) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_s, dim_s);
    for (Index i = 0; i < dim_s; ++i)
      for (Index j = 0; j < dim_s; ++j)
        for (Index e = 0; e < dim_e; ++e)
          out(i, j) += op(i * dim_e + e, j * dim_e + e);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_e, dim_e);
  for (Index a = 0; a < dim_e; ++a)
    for (Index b = 0; b < dim_e; ++b)
      for (Index s = 0; s < dim_s; ++s)
        out(a, b) += op(s * dim_e + a, s * dim_e + b);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Index dim_s, Index dim_e,
                            Subsystem keep) {
  return DensityMatrix(partial_trace_linear(rho.matrix(), dim_s, dim_e, keep));
}

HermitianPropagator::HermitianPropagator(const ComplexMatrix& h)
    : eig_(hermitian_eigensystem(h, 1e-10 * std::max(1.0, max_abs(h)))) {}

ComplexVector HermitianPropagator::state(const ComplexVector& psi0, double t) const {
  if (psi0.size() != eig_.vectors.rows()) {
    throw std::invalid_argument("HermitianPropagator: state dimension mismatch");
  }
  ComplexVector coeffs = eig_.vectors.adjoint() * psi0;
  for (Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(-kI * eig_.values(k) * t);
  }
  return eig_.vectors * coeffs;
}

ComplexMatrix HermitianPropagator::unitary(double t) const {
  ComplexVector phases(eig_.values.size());
  for (Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(-kI * eig_.values(k) * t);
  }
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

ComplexMatrix HermitianPropagator::conjugate(const ComplexMatrix& op, double t) const {
  ComplexMatrix u = unitary(t);
  return u * op * u.adjoint();
}

DensityMatrix evolve(const HamiltonianModel& model, const DensityMatrix& rho0, double t) {
  if (rho0.dim() != model.dim_s * model.dim_e) {
    throw std::invalid_argument("evolve: state dimension mismatch");
  }
  HermitianPropagator prop(model.h_total);
  return DensityMatrix(prop.conjugate(rho0.matrix(), t));
}

}  // namespace liouvrec
