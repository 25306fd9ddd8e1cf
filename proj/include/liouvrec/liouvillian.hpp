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

#include <vector>

#include "liouvrec/tomography.hpp"

namespace liouvrec {

enum class GeneratorQuality { ok, near_singular };

inline const char* to_string(GeneratorQuality q) {
  return q == GeneratorQuality::ok ? "ok" : "near_singular";
}

// Time-local generator in the flattened pair basis:
// d/dt rho[j1,j2] = sum_{i1,i2} rho[i1,i2] * g[(i1,i2),(j1,j2)].
struct GeneratorMatrix {
  int n = 0;
  double t = 0.0;
  ComplexMatrix g;
  double condition_of_d = 0.0;
  GeneratorQuality quality = GeneratorQuality::ok;
};

// Maps with condition numbers at or above this are flagged near_singular.
inline constexpr double kSingularCondition = 1e10;

// Finite difference of a map series on its own (uniform) grid:
// interior uses the 5-point 4th-order stencil (f[-2] - 8 f[-1] + 8 f[1] - f[2]) / 12h,
// falling back to the 3-point central and then the 2nd-order one-sided stencil
// (-3 f[0] + 4 f[1] - f[2]) / 2h near the edges.
ComplexMatrix differentiate_d(const std::vector<ProcessMatrix>& series, std::size_t index);

// Solves d * g = d_dot by partial-pivot LU (no pseudo-inverse: near-singular
// input is flagged, not regularized).
GeneratorMatrix reconstruct_g(const ProcessMatrix& d, const ComplexMatrix& d_dot);

struct GeneratorTolerances {
  double trace_rows = 1e-6;
  double conjugation = 1e-6;
};

struct GeneratorValidation {
  ConstraintCheck trace_rows;   // sum_j g[(i1,i2),(j,j)] = 0
  ConstraintCheck conjugation;  // conj(g[(i1,i2),(j1,j2)]) = g[(i2,i1),(j2,j1)]
  bool pass() const { return trace_rows.pass && conjugation.pass; }
  std::string first_failure() const;
};

GeneratorValidation validate_generator(const GeneratorMatrix& g,
                                       const GeneratorTolerances& tol = {});

// Right-hand side of the master equation for a Hermitian argument.
ComplexMatrix apply_generator(const GeneratorMatrix& g, const DensityMatrix& rho);
ComplexMatrix apply_generator_linear(const GeneratorMatrix& g, const ComplexMatrix& rho);

// Classical RK4 through the sampled generator series (linear interpolation at
// half steps), one output state per sample time, starting from rho0 at the
// first sample. Throws on near_singular samples and on trace drift > 1e-6.
std::vector<DensityMatrix> propagate(const std::vector<GeneratorMatrix>& g_series,
                                     const DensityMatrix& rho0);

// Canonical two-level relaxation pattern: gamma1 de-excites, gamma3 excites,
// gamma2 damps coherences at gamma2 / 2.
ComplexMatrix two_level_lindblad_generator(double gamma1, double gamma2, double gamma3);

struct TwoLevelRates {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  double eta = 0.0;                 // gamma2 - gamma1 - gamma3
  double structure_residual = 0.0;  // distance from the relaxation pattern
};

// Reads the rates off a two-level generator. Rates come from the real parts
// of the pattern entries (imaginary parts are frequency shifts, not rates);
// structure_residual is the largest off-pattern entry or pattern-consistency
// mismatch.
TwoLevelRates lindblad_fit_two_level(const GeneratorMatrix& g);

}  // namespace liouvrec
