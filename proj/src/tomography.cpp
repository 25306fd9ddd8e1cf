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

#include "liouvrec/tomography.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace liouvrec {

std::vector<InputBasisState> input_basis(int n) {
  if (n < 2) throw std::invalid_argument("input_basis: need at least 2 levels");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<InputBasisState> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      InputBasisState state;
      state.k1 = k1;
      state.k2 = k2;
      state.amplitudes = ComplexVector::Zero(n);
      if (k1 == k2) {
        state.amplitudes(k1) = 1.0;
      } else if (k1 > k2) {
        state.amplitudes(k1) = inv_sqrt2;
        state.amplitudes(k2) = inv_sqrt2;
      } else {
        state.amplitudes(k1) = inv_sqrt2;
        state.amplitudes(k2) = kI * inv_sqrt2;
      }
      basis.push_back(std::move(state));
    }
  }
  return basis;
}

MMatrix build_m(int n) {
  const auto basis = input_basis(n);
  const Index nn = static_cast<Index>(n) * n;
  MMatrix out;
  out.n = n;
  out.m = ComplexMatrix(nn, nn);
  for (Index row = 0; row < nn; ++row) {
    const ComplexVector& c = basis[static_cast<std::size_t>(row)].amplitudes;
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2)
        out.m(row, pair_index(i1, i2, n)) = c(i1) * std::conj(c(i2));
  }
  Eigen::PartialPivLU<ComplexMatrix> lu(out.m);
  out.m_inv = lu.inverse();
  out.inverse_residual =
      max_abs(out.m * out.m_inv - ComplexMatrix::Identity(nn, nn));
  if (out.inverse_residual > 1e-10) {
    throw std::runtime_error("build_m: inversion residual " +
                             std::to_string(out.inverse_residual));
  }
  return out;
}

ProcessMatrix identity_process(int n, double t) {
  const Index nn = static_cast<Index>(n) * n;
  return ProcessMatrix{n, t, ComplexMatrix::Identity(nn, nn)};
}

void check_tomogram_series(const TomogramSeries& series) {
  if (series.n < 2) throw std::invalid_argument("tomogram series: n must be >= 2");
  const std::size_t pairs = static_cast<std::size_t>(series.n) * series.n;
  if (series.snapshots.size() != pairs) {
    throw std::invalid_argument("tomogram series: expected " + std::to_string(pairs) +
                                " preparations, got " +
                                std::to_string(series.snapshots.size()));
  }
  if (series.times.empty()) {
    throw std::invalid_argument("tomogram series: no time samples");
  }
  for (std::size_t i = 1; i < series.times.size(); ++i) {
    if (!(series.times[i] > series.times[i - 1])) {
      throw std::invalid_argument("tomogram series: times must be strictly increasing");
    }
  }
  for (std::size_t p = 0; p < pairs; ++p) {
    if (series.snapshots[p].size() != series.times.size()) {
      throw std::invalid_argument("tomogram series: preparation " + std::to_string(p) +
                                  " has " + std::to_string(series.snapshots[p].size()) +
                                  " snapshots for " + std::to_string(series.times.size()) +
                                  " times");
    }
    for (const DensityMatrix& rho : series.snapshots[p]) {
      if (rho.dim() != series.n) {
        throw std::invalid_argument("tomogram series: snapshot dimension " +
                                    std::to_string(rho.dim()) + " != n");
      }
    }
  }
}

ProcessMatrix d_from_tomograms(const TomogramSeries& series, const MMatrix& m,
                               std::size_t time_index) {
  check_tomogram_series(series);
  if (m.n != series.n) {
    throw std::invalid_argument("d_from_tomograms: basis built for n = " +
                                std::to_string(m.n) + ", series has n = " +
                                std::to_string(series.n));
  }
  if (time_index >= series.times.size()) {
    throw std::out_of_range("d_from_tomograms: time index out of range");
  }
  const int n = series.n;
  const Index nn = static_cast<Index>(n) * n;
  ComplexMatrix s(nn, nn);
  for (Index row = 0; row < nn; ++row) {
    const ComplexMatrix& rho =
        series.snapshots[static_cast<std::size_t>(row)][time_index].matrix();
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2)
        s(row, pair_index(j1, j2, n)) = rho(j1, j2);
  }
  ProcessMatrix d{n, series.times[time_index], m.m_inv * s};
  ProcessTolerances ingest{1e-6, 1e-6, 1e-6};
  const ProcessValidation report = validate_process(d, ingest);
  if (!report.pass()) {
    throw std::invalid_argument("d_from_tomograms: reconstructed map violates '" +
                                report.first_failure() + "' at t = " +
                                std::to_string(d.t));
  }
  return d;
}

CompositeChannel::CompositeChannel(HamiltonianModel model, const DensityMatrix& rho_env)
    : model_(std::move(model)), propagator_(model_.h_total) {
  if (rho_env.dim() != model_.dim_e) {
    throw std::invalid_argument("CompositeChannel: environment state dimension " +
                                std::to_string(rho_env.dim()) + " != dim_e = " +
                                std::to_string(model_.dim_e));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_env.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("CompositeChannel: environment eigensolver failed");
  }
  for (Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double p = solver.eigenvalues()(k);
    if (p > 1e-14) {
      env_weights_.push_back(p);
      env_states_.push_back(solver.eigenvectors().col(k));
    }
  }
}

ComplexMatrix CompositeChannel::reduced_output(const ComplexVector& psi_system,
                                               double t) const {
  const Index ns = model_.dim_s;
  const Index ne = model_.dim_e;
  ComplexMatrix out = ComplexMatrix::Zero(ns, ns);
  for (std::size_t a = 0; a < env_states_.size(); ++a) {
    ComplexVector psi0(ns * ne);
    for (Index s = 0; s < ns; ++s) psi0.segment(s * ne, ne) = psi_system(s) * env_states_[a];
    const ComplexVector psi_t = propagator_.state(psi0, t);
    Eigen::Map<const ComplexMatrix> block(psi_t.data(), ne, ns);
    // column s of `block` is the environment amplitude vector for system
    // index s (row-major composite layout seen through a column-major map)
    out += env_weights_[a] * (block.transpose().conjugate() * block).transpose();
  }
  return out;
}

ProcessMatrix CompositeChannel::d_at(double t) const {
  const int n = static_cast<int>(model_.dim_s);
  const Index ns = model_.dim_s;
  const Index ne = model_.dim_e;
  const Index nn = ns * ns;
  ComplexMatrix d = ComplexMatrix::Zero(nn, nn);
  std::vector<ComplexMatrix> evolved(static_cast<std::size_t>(ns));
  for (std::size_t a = 0; a < env_states_.size(); ++a) {
    for (Index i = 0; i < ns; ++i) {
      ComplexVector psi0 = ComplexVector::Zero(ns * ne);
      psi0.segment(i * ne, ne) = env_states_[a];
      const ComplexVector psi_t = propagator_.state(psi0, t);
      ComplexMatrix m(ns, ne);
      for (Index s = 0; s < ns; ++s) m.row(s) = psi_t.segment(s * ne, ne).transpose();
      evolved[static_cast<std::size_t>(i)] = std::move(m);
    }
    for (Index i1 = 0; i1 < ns; ++i1) {
      for (Index i2 = 0; i2 < ns; ++i2) {
        const ComplexMatrix overlap =
            evolved[static_cast<std::size_t>(i1)] *
            evolved[static_cast<std::size_t>(i2)].adjoint();
        for (Index j1 = 0; j1 < ns; ++j1)
          for (Index j2 = 0; j2 < ns; ++j2)
            d(pair_index(i1, i2, ns), pair_index(j1, j2, ns)) +=
                env_weights_[a] * overlap(j1, j2);
      }
    }
  }
  return ProcessMatrix{n, t, std::move(d)};
}

DensityMatrix CompositeChannel::output_state(const ComplexVector& psi_system,
                                             double t) const {
  if (psi_system.size() != model_.dim_s) {
    throw std::invalid_argument("CompositeChannel: system state dimension mismatch");
  }
  return DensityMatrix(reduced_output(psi_system, t));
}

TomogramSeries CompositeChannel::tomograms(const std::vector<double>& times) const {
  const int n = static_cast<int>(model_.dim_s);
  const auto basis = input_basis(n);
  TomogramSeries series;
  series.n = n;
  series.times = times;
  series.snapshots.resize(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    series.snapshots[p].reserve(times.size());
    for (double t : times) {
      series.snapshots[p].push_back(output_state(basis[p].amplitudes, t));
    }
  }
  return series;
}

ProcessMatrix d_from_composite(const HamiltonianModel& model, const DensityMatrix& rho_env,
                               double t) {
  return CompositeChannel(model, rho_env).d_at(t);
}

ComplexMatrix apply_process_linear(const ProcessMatrix& d, const ComplexMatrix& rho0) {
  const int n = d.n;
  if (rho0.rows() != n || rho0.cols() != n) {
    throw std::invalid_argument("apply_process: state dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) {
      Complex acc = 0.0;
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          acc += rho0(i1, i2) * d.d(pair_index(i1, i2, n), pair_index(j1, j2, n));
      out(j1, j2) = acc;
    }
  return out;
}

DensityMatrix apply_process(const ProcessMatrix& d, const DensityMatrix& rho0) {
  return DensityMatrix(apply_process_linear(d, rho0.matrix()),
                       DensityMatrix::ingestion_tolerances());
}

ComplexMatrix choi_matrix(const ProcessMatrix& d) {
  const int n = d.n;
  ComplexMatrix c(static_cast<Index>(n) * n, static_cast<Index>(n) * n);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          c(static_cast<Index>(i1) * n + j1, static_cast<Index>(i2) * n + j2) =
              d.d(pair_index(i1, i2, n), pair_index(j1, j2, n));
  return c;
}

bool ProcessValidation::pass() const {
  return trace_rows.pass && conjugation.pass && choi_hermiticity.pass && choi_floor.pass;
}

std::string ProcessValidation::first_failure() const {
  for (const ConstraintCheck* c : {&trace_rows, &conjugation, &choi_hermiticity, &choi_floor}) {
    if (!c->pass) return c->name;
  }
  return {};
}

ProcessValidation validate_process(const ProcessMatrix& d, const ProcessTolerances& tol) {
  const int n = d.n;
  const Index nn = static_cast<Index>(n) * n;
  if (d.d.rows() != nn || d.d.cols() != nn) {
    throw std::invalid_argument("validate_process: map is not n^2 x n^2");
  }

  ProcessValidation report;

  double trace_res = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      Complex row_sum = 0.0;
      for (int j = 0; j < n; ++j) row_sum += d.d(pair_index(i1, i2, n), pair_index(j, j, n));
      const Complex expected = (i1 == i2) ? Complex(1.0) : Complex(0.0);
      trace_res = std::max(trace_res, std::abs(row_sum - expected));
    }
  report.trace_rows = {"trace_rows", trace_res, tol.trace_rows, trace_res <= tol.trace_rows};

  double conj_res = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
          conj_res = std::max(
              conj_res,
              std::abs(std::conj(d.d(pair_index(i1, i2, n), pair_index(j1, j2, n))) -
                       d.d(pair_index(i2, i1, n), pair_index(j2, j1, n))));
  report.conjugation = {"conjugation", conj_res, tol.conjugation, conj_res <= tol.conjugation};

  const ComplexMatrix choi = choi_matrix(d);
  const double choi_herm = hermiticity_residual(choi);
  report.choi_hermiticity =
      {"choi_hermiticity", choi_herm, tol.choi, choi_herm <= tol.choi};

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      (Complex(0.5) * (choi + choi.adjoint().eval())).eval(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("validate_process: Choi eigensolver failed");
  }
  report.choi_min_eigenvalue = solver.eigenvalues().minCoeff();
  const double floor_res = std::max(0.0, -report.choi_min_eigenvalue);
  report.choi_floor = {"choi_floor", floor_res, tol.choi, floor_res <= tol.choi};

  return report;
}

ComplexMatrix to_presentation_order_two_level(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("to_presentation_order_two_level: expected 4x4");
  }
  // ascending pairs (0,0),(0,1),(1,0),(1,1) -> presentation (1,1),(1,0),(0,1),(0,0)
  const Index perm[4] = {3, 2, 1, 0};
  ComplexMatrix out(4, 4);
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c) out(r, c) = m(perm[r], perm[c]);
  return out;
}

}  // namespace liouvrec
