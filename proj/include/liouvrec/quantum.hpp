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

#pragma once

#include <utility>

#include "liouvrec/linalg.hpp"

namespace liouvrec {

// Validated density operator: Hermitian, unit trace, positive semidefinite
// (eigenvalues above -eigenvalue_floor). Construction throws
// std::invalid_argument with the violated constraint named.
class DensityMatrix {
 public:
  struct Tolerances {
    double trace = 1e-10;
    double hermiticity = 1e-10;
    double eigenvalue_floor = 1e-9;
  };
  // Relaxed bounds for states arriving from files or reconstructed channels.
  static Tolerances ingestion_tolerances() { return {1e-6, 1e-6, 1e-6}; }

  explicit DensityMatrix(ComplexMatrix m) : DensityMatrix(std::move(m), Tolerances{}) {}
  DensityMatrix(ComplexMatrix m, const Tolerances& tol);

  static DensityMatrix pure(const ComplexVector& psi) { return pure(psi, Tolerances{}); }
  static DensityMatrix pure(const ComplexVector& psi, const Tolerances& tol);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

// Bipartite system (S x E) with a Hermitian total Hamiltonian acting on the
// composite space; composite index = s * dim_e + e (system index slow).
struct HamiltonianModel {
  Index dim_s = 0;
  Index dim_e = 0;
  ComplexMatrix h_total;
};

// Validates dimensions and hermiticity (1e-10 relative to max |H|).
HamiltonianModel make_hamiltonian_model(Index dim_s, Index dim_e, ComplexMatrix h_total);

enum class Subsystem { system, environment };

// Linear partial trace over the complement of `keep`; no state validation.
ComplexMatrix partial_trace_linear(const ComplexMatrix& op, Index dim_s, Index dim_e,
                                   Subsystem keep);

DensityMatrix partial_trace(const DensityMatrix& rho, Index dim_s, Index dim_e,
                            Subsystem keep);

// exp(-iHt) applied via one cached eigendecomposition; cheap per time point.
class HermitianPropagator {
 public:
  explicit HermitianPropagator(const ComplexMatrix& h);

  ComplexVector state(const ComplexVector& psi0, double t) const;
  // U(t) op U(t)^dagger
  ComplexMatrix conjugate(const ComplexMatrix& op, double t) const;
  ComplexMatrix unitary(double t) const;

  double eigen_residual() const { return eig_.residual; }
  const HermitianEigensystem& eigensystem() const { return eig_; }

 private:
  HermitianEigensystem eig_;
};

// rho(t) = U(t) rho0 U(t)^dagger for the composite model.
DensityMatrix evolve(const HamiltonianModel& model, const DensityMatrix& rho0, double t);

}  // namespace liouvrec
