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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace liouvrec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

// Flattened index of the ordered pair (a, b), a and b in [0, n).
inline Index pair_index(Index a, Index b, Index n) { return a * n + b; }

// Entrywise max-abs norm.
double max_abs(const ComplexMatrix& m);

// Entrywise comparison: max |a - b| <= tol. Shapes must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// max |m - m^dagger| over entries; zero iff Hermitian.
double hermiticity_residual(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// 1/2 * sum |eigenvalues(a - b)| for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigensystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // unit-norm columns, matching order
  double residual;        // max |H v_k - lambda_k v_k| over entries
};

// Throws std::invalid_argument if h is not Hermitian within hermiticity_tol.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h,
                                           double hermiticity_tol = 1e-10);

// sigma_max / sigma_min; +inf when sigma_min underflows to zero.
double condition_number(const ComplexMatrix& m);

// steps + 1 evenly spaced points covering [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, int steps);

}  // namespace liouvrec
