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

#include <string>
#include <vector>

#include "liouvrec/quantum.hpp"

namespace liouvrec {

// Pure input state tagged by its pair (k1, k2). The basis spans the operator
// space of an n-level system with n^2 preparations:
//   k1 == k2 : |k1>
//   k1 >  k2 : (|k1> + |k2>) / sqrt(2)
//   k1 <  k2 : (|k1> + i |k2>) / sqrt(2)
struct InputBasisState {
  int k1 = 0;
  int k2 = 0;
  ComplexVector amplitudes;
};

// All n^2 preparations ordered by pair_index(k1, k2, n). Requires n >= 2.
std::vector<InputBasisState> input_basis(int n);

// Overlap matrix of the preparations: m[(k1,k2),(i1,i2)] = c_i1 * conj(c_i2)
// where c are the amplitudes of preparation (k1,k2). m_inv is checked to
// max |m * m_inv - I| <= 1e-10 at build time.
struct MMatrix {
  int n = 0;
  ComplexMatrix m;
  ComplexMatrix m_inv;
  double inverse_residual = 0.0;
};

MMatrix build_m(int n);

// Dynamical map at a fixed time in the flattened pair basis:
// rho_out[j1,j2] = sum_{i1,i2} rho_in[i1,i2] * d[(i1,i2),(j1,j2)].
struct ProcessMatrix {
  int n = 0;
  double t = 0.0;
  ComplexMatrix d;
};

ProcessMatrix identity_process(int n, double t = 0.0);

// Time series of evolved preparations: snapshots[pair_index(k1,k2,n)][i] is
// the state of preparation (k1,k2) at times[i].
struct TomogramSeries {
  int n = 0;
  std::vector<double> times;
  std::vector<std::vector<DensityMatrix>> snapshots;
};

// Shape and ordering checks; throws std::invalid_argument naming the problem.
void check_tomogram_series(const TomogramSeries& series);

// Least-action estimator D = M^-1 S at one time index. The result is checked
// against the map invariants at ingestion tolerance (1e-6); violations throw
// std::invalid_argument naming the constraint.
ProcessMatrix d_from_tomograms(const TomogramSeries& series, const MMatrix& m,
                               std::size_t time_index);

// Exact dynamical map of a unitarily evolving system+environment pair with a
// fixed environment state; one eigendecomposition shared across times.
class CompositeChannel {
 public:
  CompositeChannel(HamiltonianModel model, const DensityMatrix& rho_env);

  ProcessMatrix d_at(double t) const;
  DensityMatrix output_state(const ComplexVector& psi_system, double t) const;
  TomogramSeries tomograms(const std::vector<double>& times) const;

  const HamiltonianModel& model() const { return model_; }

 private:
  ComplexMatrix reduced_output(const ComplexVector& psi_system, double t) const;

  HamiltonianModel model_;
  HermitianPropagator propagator_;
  std::vector<double> env_weights_;
  std::vector<ComplexVector> env_states_;
};

ProcessMatrix d_from_composite(const HamiltonianModel& model, const DensityMatrix& rho_env,
                               double t);

// Applies the map; the result is validated at ingestion tolerance.
DensityMatrix apply_process(const ProcessMatrix& d, const DensityMatrix& rho0);
// Linear extension without validation.
ComplexMatrix apply_process_linear(const ProcessMatrix& d, const ComplexMatrix& rho0);

// Reindexing c[i1*n + j1, i2*n + j2] = d[(i1,i2),(j1,j2)]; Hermitian and
// positive semidefinite exactly when the map is consistent / completely
// positive.
ComplexMatrix choi_matrix(const ProcessMatrix& d);

struct ConstraintCheck {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = true;
};

struct ProcessTolerances {
  double trace_rows = 1e-8;
  double conjugation = 1e-8;
  double choi = 1e-8;
};

struct ProcessValidation {
  ConstraintCheck trace_rows;        // sum_j d[(i1,i2),(j,j)] = delta_{i1,i2}
  ConstraintCheck conjugation;       // conj(d[(i1,i2),(j1,j2)]) = d[(i2,i1),(j2,j1)]
  ConstraintCheck choi_hermiticity;
  ConstraintCheck choi_floor;        // min eigenvalue >= -bound
  double choi_min_eigenvalue = 0.0;

  bool pass() const;
  // Name of the first failed constraint, empty when all pass.
  std::string first_failure() const;
};

ProcessValidation validate_process(const ProcessMatrix& d,
                                   const ProcessTolerances& tol = {});

// Row/column permutation to the two-level presentation order
// (1,1),(1,0),(0,1),(0,0) used when printing 4x4 maps and generators.
ComplexMatrix to_presentation_order_two_level(const ComplexMatrix& m);

}  // namespace liouvrec
