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

#include "liouvrec/liouvillian.hpp"

namespace liouvrec {

// ---------------------------------------------------------------------------
// Zero-temperature two-level decay (closed form).

struct AmplitudeDampingParams {
  double gamma = 1.0;  // population decay rate
};

// Closed-form decayed state; excited population scales by exp(-gamma t),
// coherences by exp(-gamma t / 2). Requires t >= 0.
DensityMatrix amplitude_damped_state(const AmplitudeDampingParams& params,
                                     const DensityMatrix& rho0, double t);

TomogramSeries amplitude_damping_tomograms(const AmplitudeDampingParams& params,
                                           const std::vector<double>& times);

// ---------------------------------------------------------------------------
// Two-level atom exchanging one quantum with a single bosonic mode.

struct JaynesCummingsParams {
  double omega_a = 0.0;  // atomic transition frequency
  double omega = 0.0;    // mode frequency
  double lambda = 1.0;   // coupling strength
  int fock_m = 0;        // environment photon number for the closed forms
  int n_max = -1;        // field truncation (dimension n_max + 1); -1 -> fock_m + 1
};

int jc_field_dim(const JaynesCummingsParams& params);

// H = omega_a * sigma_z (x) 1 + omega * 1 (x) a^dag a
//     + lambda * (sigma_+ (x) a + sigma_- (x) a^dag),
// sigma_z = diag(-1/2, +1/2), atom index slow in the composite layout.
HamiltonianModel jc_model(const JaynesCummingsParams& params);

// Resonant rotating-frame solution for the product state
// (c0 |atom 0> + c1 |atom 1>) (x) sum_k field[k] |k>; exact for
// omega_a = omega = 0 and a large enough truncation.
ComplexVector jc_analytic_state(Complex c0, Complex c1, const std::vector<Complex>& field,
                                double t, const JaynesCummingsParams& params);

// Closed-form atomic channel for the environment prepared in |fock_m>,
// rotating frame. Requires omega_a == omega (the common value drops out).
// The coherence entry is the signed product cos(tau_M) cos(tau_{M+1}); the
// populations involve its square.
ProcessMatrix jc_d_analytic(const JaynesCummingsParams& params, double t);
ComplexMatrix jc_d_dot_analytic(const JaynesCummingsParams& params, double t);

// Closed-form relaxation rates of the same channel; entries are NaN within
// 1e-12 of a vanishing denominator. eta = gamma2 - gamma1 - gamma3,
// structure_residual = 0.
TwoLevelRates jc_gammas_analytic(const JaynesCummingsParams& params, double t);

// Times in (0, t_max] where the channel becomes non-invertible or a rate
// denominator vanishes; exact zeros of the four cosine factors involved.
std::vector<double> jc_singular_times(const JaynesCummingsParams& params, double t_max);

// Drops every time within `radius` of one of `centers`.
std::vector<double> exclude_neighborhoods(const std::vector<double>& times,
                                          const std::vector<double>& centers,
                                          double radius);

// ---------------------------------------------------------------------------
// Two-level atom coupled to a comb of cavity modes, single-excitation sector.

enum class ModeParity { odd_only, all };
enum class Frame { rotating, lab };

struct MultimodeCavityParams {
  int modes = 400;                          // mode index k runs 1..modes
  double length = 6.283185307179586476925;  // cavity round-trip sets the comb spacing
  double light_speed = 1.0;
  double lambda = 0.3;                      // uniform coupling
  double omega_a = 101.0;                   // atomic transition frequency
  ModeParity parity = ModeParity::odd_only;
};

// Sector basis: index 0 = |excited atom, vacuum>, index m >= 1 = |ground
// atom, photon in coupled mode m>. Diagonalized once at construction.
class MultimodeCavity {
 public:
  explicit MultimodeCavity(const MultimodeCavityParams& params, Frame frame = Frame::rotating);

  Index sector_dim() const;
  const std::vector<int>& coupled_modes() const { return coupled_modes_; }
  double mode_frequency(int k) const;

  // <excited, vacuum | psi(t)> for the initially excited atom.
  Complex amplitude(double t) const;
  // P(t) = |amplitude(t)|^2
  double survival(double t) const;
  ComplexVector sector_state(double t) const;

  // Atomic channel: populations relax through P(t), coherences through the
  // amplitude (with the ground-state phase of the chosen frame).
  ProcessMatrix channel(double t) const;

  const MultimodeCavityParams& params() const { return params_; }
  Frame frame() const { return frame_; }

 private:
  MultimodeCavityParams params_;
  Frame frame_;
  std::vector<int> coupled_modes_;
  double ground_energy_ = 0.0;
  RealVector energies_;
  RealMatrix vectors_;
  RealVector weights_;  // |<excited,vac | eigenvector_j>|^2
};

struct ScalarSeries {
  std::vector<double> times;
  std::vector<double> values;
};

ScalarSeries multimode_p_of_t(const MultimodeCavityParams& params,
                              const std::vector<double>& times);

// gamma(t) = -P'(t) / P(t) on the sampled grid (same stencils as the map
// differentiation); NaN where P <= 1e-12.
ScalarSeries gamma_from_p(const ScalarSeries& p);

// Least-squares slope of ln P over samples with t in [t_lo, t_hi]; returns
// the decay rate (minus the slope). Requires positive P on the window.
double fit_decay_rate(const ScalarSeries& p, double t_lo, double t_hi);

}  // namespace liouvrec
