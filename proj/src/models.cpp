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

#include "liouvrec/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace liouvrec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ComplexMatrix lowering_operator(Index dim) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k + 1 < dim; ++k) a(k, k + 1) = std::sqrt(double(k + 1));
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Zero-temperature two-level decay.

DensityMatrix amplitude_damped_state(const AmplitudeDampingParams& params,
                                     const DensityMatrix& rho0, double t) {
  if (rho0.dim() != 2) {
    throw std::invalid_argument("amplitude_damped_state: state is not 2-level");
  }
  if (t < 0.0) {
    throw std::invalid_argument("amplitude_damped_state: t must be >= 0");
  }
  const double e = std::exp(-params.gamma * t);
  const double s = std::exp(-0.5 * params.gamma * t);
  const ComplexMatrix& r = rho0.matrix();
  ComplexMatrix out(2, 2);
  out(1, 1) = e * r(1, 1);
  out(0, 0) = r(0, 0) + (1.0 - e) * r(1, 1);
  out(1, 0) = s * r(1, 0);
  out(0, 1) = s * r(0, 1);
  return DensityMatrix(std::move(out));
}

TomogramSeries amplitude_damping_tomograms(const AmplitudeDampingParams& params,
                                           const std::vector<double>& times) {
  const auto basis = input_basis(2);
  TomogramSeries series;
  series.n = 2;
  series.times = times;
  series.snapshots.resize(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const DensityMatrix rho0 = DensityMatrix::pure(basis[p].amplitudes);
    series.snapshots[p].reserve(times.size());
    for (double t : times) {
      series.snapshots[p].push_back(amplitude_damped_state(params, rho0, t));
    }
  }
  return series;
}

// ---------------------------------------------------------------------------
// Single-mode exchange model.

int jc_field_dim(const JaynesCummingsParams& params) {
  if (params.fock_m < 0) throw std::invalid_argument("jc: fock_m must be >= 0");
  const int n_max = params.n_max < 0 ? params.fock_m + 1 : params.n_max;
  if (n_max < params.fock_m + 1) {
    throw std::invalid_argument("jc: n_max must be at least fock_m + 1");
  }
  return n_max + 1;
}

HamiltonianModel jc_model(const JaynesCummingsParams& params) {
  const Index dim_e = jc_field_dim(params);
  ComplexMatrix sigma_z = ComplexMatrix::Zero(2, 2);
  sigma_z(0, 0) = -0.5;
  sigma_z(1, 1) = 0.5;
  ComplexMatrix sigma_plus = ComplexMatrix::Zero(2, 2);
  sigma_plus(1, 0) = 1.0;

  const ComplexMatrix a = lowering_operator(dim_e);
  const ComplexMatrix eye_a = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix eye_f = ComplexMatrix::Identity(dim_e, dim_e);
  const ComplexMatrix number = (a.adjoint() * a).eval();

  ComplexMatrix h = params.omega_a * kron(sigma_z, eye_f) + params.omega * kron(eye_a, number) +
                    params.lambda * (kron(sigma_plus, a) + kron(sigma_plus.adjoint(), a.adjoint()));
  return make_hamiltonian_model(2, dim_e, std::move(h));
}

ComplexVector jc_analytic_state(Complex c0, Complex c1, const std::vector<Complex>& field,
                                double t, const JaynesCummingsParams& params) {
  if (params.omega_a != 0.0 || params.omega != 0.0) {
    throw std::invalid_argument(
        "jc_analytic_state: closed form holds in the frame with vanishing bare "
        "frequencies (set omega_a = omega = 0)");
  }
  const Index dim_e = jc_field_dim(params);
  const double atom_norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (atom_norm == 0.0) throw std::invalid_argument("jc_analytic_state: zero atom state");
  c0 /= atom_norm;
  c1 /= atom_norm;

  double field_norm2 = 0.0;
  for (const Complex& e : field) field_norm2 += std::norm(e);
  if (field_norm2 == 0.0) throw std::invalid_argument("jc_analytic_state: zero field state");
  const double field_norm = std::sqrt(field_norm2);

  ComplexVector psi = ComplexVector::Zero(2 * dim_e);
  auto at = [dim_e](Index atom, Index photons) { return atom * dim_e + photons; };
  const double lam = params.lambda;
  for (std::size_t k = 0; k < field.size(); ++k) {
    const Complex ek = field[k] / field_norm;
    if (ek == Complex(0.0)) continue;
    const auto kk = static_cast<Index>(k);
    if (kk >= dim_e) throw std::invalid_argument("jc_analytic_state: field exceeds truncation");
    if (c0 != Complex(0.0)) {
      const double tau_k = lam * std::sqrt(double(k)) * t;
      psi(at(0, kk)) += c0 * ek * std::cos(tau_k);
      if (kk >= 1) psi(at(1, kk - 1)) += -kI * c0 * ek * std::sin(tau_k);
    }
    if (c1 != Complex(0.0)) {
      if (kk + 1 >= dim_e) {
        throw std::invalid_argument("jc_analytic_state: truncation too small for excited atom");
      }
      const double tau_k1 = lam * std::sqrt(double(k + 1)) * t;
      psi(at(1, kk)) += c1 * ek * std::cos(tau_k1);
      psi(at(0, kk + 1)) += -kI * c1 * ek * std::sin(tau_k1);
    }
  }
  return psi;
}

namespace {

struct JcAngles {
  double lam, root_m, root_m1, tau_m, tau_m1;
};

JcAngles jc_angles(const JaynesCummingsParams& params, double t) {
  if (params.omega_a != params.omega) {
    throw std::invalid_argument("jc closed forms require omega_a == omega (resonance)");
  }
  JcAngles a;
  a.lam = params.lambda;
  a.root_m = std::sqrt(double(params.fock_m));
  a.root_m1 = std::sqrt(double(params.fock_m + 1));
  a.tau_m = a.lam * a.root_m * t;
  a.tau_m1 = a.lam * a.root_m1 * t;
  return a;
}

}  // namespace

ProcessMatrix jc_d_analytic(const JaynesCummingsParams& params, double t) {
  const JcAngles a = jc_angles(params, t);
  const double xi0 = std::cos(a.tau_m) * std::cos(a.tau_m);
  const double xi1 = std::cos(a.tau_m1) * std::cos(a.tau_m1);
  const double chi = std::cos(a.tau_m) * std::cos(a.tau_m1);

  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  const Index p00 = pair_index(0, 0, 2);
  const Index p01 = pair_index(0, 1, 2);
  const Index p10 = pair_index(1, 0, 2);
  const Index p11 = pair_index(1, 1, 2);
  d(p00, p00) = xi0;
  d(p00, p11) = 1.0 - xi0;
  d(p01, p01) = chi;
  d(p10, p10) = chi;
  d(p11, p00) = 1.0 - xi1;
  d(p11, p11) = xi1;
  return ProcessMatrix{2, t, std::move(d)};
}

ComplexMatrix jc_d_dot_analytic(const JaynesCummingsParams& params, double t) {
  const JcAngles a = jc_angles(params, t);
  const double xi0_dot = -a.lam * a.root_m * std::sin(2.0 * a.tau_m);
  const double xi1_dot = -a.lam * a.root_m1 * std::sin(2.0 * a.tau_m1);
  const double chi_dot = -a.lam * a.root_m * std::sin(a.tau_m) * std::cos(a.tau_m1) -
                         a.lam * a.root_m1 * std::cos(a.tau_m) * std::sin(a.tau_m1);

  ComplexMatrix d_dot = ComplexMatrix::Zero(4, 4);
  const Index p00 = pair_index(0, 0, 2);
  const Index p01 = pair_index(0, 1, 2);
  const Index p10 = pair_index(1, 0, 2);
  const Index p11 = pair_index(1, 1, 2);
  d_dot(p00, p00) = xi0_dot;
  d_dot(p00, p11) = -xi0_dot;
  d_dot(p01, p01) = chi_dot;
  d_dot(p10, p10) = chi_dot;
  d_dot(p11, p00) = -xi1_dot;
  d_dot(p11, p11) = xi1_dot;
  return d_dot;
}

TwoLevelRates jc_gammas_analytic(const JaynesCummingsParams& params, double t) {
  const JcAngles a = jc_angles(params, t);
  const double s2m = std::sin(2.0 * a.tau_m);
  const double s2m1 = std::sin(2.0 * a.tau_m1);
  const double cm = std::cos(a.tau_m);
  const double cm1 = std::cos(a.tau_m1);
  const double sm = std::sin(a.tau_m);
  const double sm1 = std::sin(a.tau_m1);

  const double den13 = std::cos(2.0 * a.tau_m) + std::cos(2.0 * a.tau_m1);
  const double den2 = cm * cm * cm1 * cm1;

  TwoLevelRates rates;
  if (std::abs(den13) <= 1e-12) {
    rates.gamma1 = kNaN;
    rates.gamma3 = kNaN;
  } else {
    rates.gamma1 =
        2.0 * a.lam * (a.root_m * s2m * sm1 * sm1 + a.root_m1 * s2m1 * cm * cm) / den13;
    rates.gamma3 =
        2.0 * a.lam * (a.root_m * s2m * cm1 * cm1 + a.root_m1 * s2m1 * sm * sm) / den13;
  }
  if (std::abs(den2) <= 1e-12) {
    rates.gamma2 = kNaN;
  } else {
    rates.gamma2 = a.lam * (a.root_m * s2m * cm1 * cm1 + a.root_m1 * s2m1 * cm * cm) / den2;
  }
  rates.eta = rates.gamma2 - rates.gamma1 - rates.gamma3;
  rates.structure_residual = 0.0;
  return rates;
}

std::vector<double> jc_singular_times(const JaynesCummingsParams& params, double t_max) {
  const double lam = params.lambda;
  const double root_m = std::sqrt(double(params.fock_m));
  const double root_m1 = std::sqrt(double(params.fock_m + 1));
  // zeros of cos(2 tau_M) + cos(2 tau_{M+1}) = 2 cos(tau_{M+1}+tau_M) cos(tau_{M+1}-tau_M)
  // and of cos(tau_M) cos(tau_{M+1}): four pure cosines, enumerated exactly
  const double factors[4] = {lam * (root_m1 + root_m), lam * (root_m1 - root_m),
                             lam * root_m, lam * root_m1};
  std::vector<double> zeros;
  for (double a : factors) {
    if (a <= 1e-15) continue;
    const double half_pi = std::numbers::pi / 2.0;
    for (int k = 0;; ++k) {
      const double t = (half_pi + k * std::numbers::pi) / a;
      if (t > t_max + 1e-12) break;
      zeros.push_back(t);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-9; }),
              zeros.end());
  return zeros;
}

std::vector<double> exclude_neighborhoods(const std::vector<double>& times,
                                          const std::vector<double>& centers,
                                          double radius) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    bool keep = true;
    for (double c : centers) {
      if (std::abs(t - c) < radius) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mode-comb cavity, single-excitation sector.

MultimodeCavity::MultimodeCavity(const MultimodeCavityParams& params, Frame frame)
    : params_(params), frame_(frame) {
  if (params_.modes < 1) throw std::invalid_argument("cavity: modes must be >= 1");
  if (params_.length <= 0.0 || params_.light_speed <= 0.0) {
    throw std::invalid_argument("cavity: length and light_speed must be positive");
  }
  for (int k = 1; k <= params_.modes; ++k) {
    if (params_.parity == ModeParity::odd_only && k % 2 == 0) continue;
    coupled_modes_.push_back(k);
  }
  const Index dim = static_cast<Index>(coupled_modes_.size()) + 1;
  ground_energy_ = (frame_ == Frame::lab) ? -0.5 * params_.omega_a : 0.0;

  RealMatrix h = RealMatrix::Zero(dim, dim);
  h(0, 0) = (frame_ == Frame::lab) ? 0.5 * params_.omega_a : 0.0;
  for (Index m = 1; m < dim; ++m) {
    const double omega_k = mode_frequency(coupled_modes_[static_cast<std::size_t>(m - 1)]);
    h(m, m) = (frame_ == Frame::lab) ? omega_k - 0.5 * params_.omega_a
                                     : omega_k - params_.omega_a;
    h(0, m) = params_.lambda;
    h(m, 0) = params_.lambda;
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("cavity: sector eigensolver failed");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  weights_ = vectors_.row(0).cwiseAbs2();
}

Index MultimodeCavity::sector_dim() const {
  return static_cast<Index>(coupled_modes_.size()) + 1;
}

double MultimodeCavity::mode_frequency(int k) const {
  return k * std::numbers::pi * params_.light_speed / params_.length;
}

Complex MultimodeCavity::amplitude(double t) const {
  Complex c = 0.0;
  for (Index j = 0; j < energies_.size(); ++j) {
    c += weights_(j) * std::exp(-kI * energies_(j) * t);
  }
  return c;
}

double MultimodeCavity::survival(double t) const { return std::norm(amplitude(t)); }

ComplexVector MultimodeCavity::sector_state(double t) const {
  ComplexVector coeffs(energies_.size());
  for (Index j = 0; j < energies_.size(); ++j) {
    coeffs(j) = vectors_(0, j) * std::exp(-kI * energies_(j) * t);
  }
  return vectors_.cast<Complex>() * coeffs;
}

ProcessMatrix MultimodeCavity::channel(double t) const {
  const Complex c = amplitude(t);
  const double p = std::norm(c);
  const Complex chi = c * std::exp(kI * ground_energy_ * t);

  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  const Index p00 = pair_index(0, 0, 2);
  const Index p01 = pair_index(0, 1, 2);
  const Index p10 = pair_index(1, 0, 2);
  const Index p11 = pair_index(1, 1, 2);
  d(p00, p00) = 1.0;
  d(p01, p01) = std::conj(chi);
  d(p10, p10) = chi;
  d(p11, p00) = 1.0 - p;
  d(p11, p11) = p;
  return ProcessMatrix{2, t, std::move(d)};
}

ScalarSeries multimode_p_of_t(const MultimodeCavityParams& params,
                              const std::vector<double>& times) {
  const MultimodeCavity cavity(params, Frame::rotating);
  ScalarSeries series;
  series.times = times;
  series.values.reserve(times.size());
  for (double t : times) series.values.push_back(cavity.survival(t));
  return series;
}

namespace {

double scalar_stencil(const std::vector<double>& v, std::size_t i, double h) {
  const std::size_t last = v.size() - 1;
  if (i >= 2 && i + 2 <= last) {
    return (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
  }
  if (i >= 1 && i + 1 <= last) return (v[i + 1] - v[i - 1]) / (2.0 * h);
  if (i == 0) return (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  return (3.0 * v[last] - 4.0 * v[last - 1] + v[last - 2]) / (2.0 * h);
}

}  // namespace

ScalarSeries gamma_from_p(const ScalarSeries& p) {
  if (p.times.size() != p.values.size() || p.times.size() < 3) {
    throw std::invalid_argument("gamma_from_p: need at least 3 aligned samples");
  }
  const double h = p.times[1] - p.times[0];
  if (!(h > 0.0)) throw std::invalid_argument("gamma_from_p: times must increase");
  for (std::size_t i = 1; i < p.times.size(); ++i) {
    if (std::abs(p.times[i] - p.times[i - 1] - h) > 1e-9 * std::max(1.0, h)) {
      throw std::invalid_argument("gamma_from_p: grid is not uniform");
    }
  }
  ScalarSeries out;
  out.times = p.times;
  out.values.resize(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (p.values[i] <= 1e-12) {
      out.values[i] = kNaN;
    } else {
      out.values[i] = -scalar_stencil(p.values, i, h) / p.values[i];
    }
  }
  return out;
}

double fit_decay_rate(const ScalarSeries& p, double t_lo, double t_hi) {
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    const double t = p.times[i];
    if (t < t_lo || t > t_hi) continue;
    if (p.values[i] <= 0.0) {
      throw std::invalid_argument("fit_decay_rate: non-positive sample in window");
    }
    const double y = std::log(p.values[i]);
    sum_t += t;
    sum_y += y;
    sum_tt += t * t;
    sum_ty += t * y;
    ++count;
  }
  if (count < 2) throw std::invalid_argument("fit_decay_rate: fewer than 2 samples in window");
  const double denom = count * sum_tt - sum_t * sum_t;
  if (std::abs(denom) < 1e-300) throw std::invalid_argument("fit_decay_rate: degenerate window");
  const double slope = (count * sum_ty - sum_t * sum_y) / denom;
  return -slope;
}

}  // namespace liouvrec
