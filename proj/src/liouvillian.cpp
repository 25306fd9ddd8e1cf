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

#include "liouvrec/liouvillian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace liouvrec {

namespace {

double uniform_step(const std::vector<ProcessMatrix>& series) {
  if (series.size() < 3) {
    throw std::invalid_argument("differentiate_d: need at least 3 samples");
  }
  const double h = series[1].t - series[0].t;
  if (!(h > 0.0)) {
    throw std::invalid_argument("differentiate_d: times must be strictly increasing");
  }
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double step = series[i].t - series[i - 1].t;
    if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw std::invalid_argument("differentiate_d: grid is not uniform");
    }
  }
  return h;
}

}  // namespace

ComplexMatrix differentiate_d(const std::vector<ProcessMatrix>& series, std::size_t index) {
  const double h = uniform_step(series);
  const std::size_t last = series.size() - 1;
  if (index > last) throw std::out_of_range("differentiate_d: index out of range");
  const auto& v = series;
  if (index >= 2 && index + 2 <= last) {
    return (v[index - 2].d - 8.0 * v[index - 1].d + 8.0 * v[index + 1].d -
            v[index + 2].d) /
           (12.0 * h);
  }
  if (index >= 1 && index + 1 <= last) {
    return (v[index + 1].d - v[index - 1].d) / (2.0 * h);
  }
  if (index == 0) {
    return (-3.0 * v[0].d + 4.0 * v[1].d - v[2].d) / (2.0 * h);
  }
  return (3.0 * v[last].d - 4.0 * v[last - 1].d + v[last - 2].d) / (2.0 * h);
}

GeneratorMatrix reconstruct_g(const ProcessMatrix& d, const ComplexMatrix& d_dot) {
  const Index nn = static_cast<Index>(d.n) * d.n;
  if (d.d.rows() != nn || d.d.cols() != nn || d_dot.rows() != nn || d_dot.cols() != nn) {
    throw std::invalid_argument("reconstruct_g: shape mismatch");
  }
  GeneratorMatrix out;
  out.n = d.n;
  out.t = d.t;
  out.condition_of_d = condition_number(d.d);
  out.quality = (!std::isfinite(out.condition_of_d) ||
                 out.condition_of_d >= kSingularCondition)
                    ? GeneratorQuality::near_singular
                    : GeneratorQuality::ok;
  out.g = Eigen::PartialPivLU<ComplexMatrix>(d.d).solve(d_dot);
  return out;
}

std::string GeneratorValidation::first_failure() const {
  if (!trace_rows.pass) return trace_rows.name;
  if (!conjugation.pass) return conjugation.name;
  return {};
}

GeneratorValidation validate_generator(const GeneratorMatrix& g,
                                       const GeneratorTolerances& tol) {
  const int n = g.n;
  GeneratorValidation report;

  double trace_res = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      Complex row_sum = 0.0;
      for (int j = 0; j < n; ++j) row_sum += g.g(pair_index(i1, i2, n), pair_index(j, j, n));
      trace_res = std::max(trace_res, std::abs(row_sum));
    }
  report.trace_rows = {"trace_rows", trace_res, tol.trace_rows, trace_res <= tol.trace_rows};

  double conj_res = 0.0;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2)
          conj_res = std::max(
              conj_res,
              std::abs(std::conj(g.g(pair_index(i1, i2, n), pair_index(j1, j2, n))) -
                       g.g(pair_index(i2, i1, n), pair_index(j2, j1, n))));
  report.conjugation = {"conjugation", conj_res, tol.conjugation, conj_res <= tol.conjugation};

  return report;
}

ComplexMatrix apply_generator_linear(const GeneratorMatrix& g, const ComplexMatrix& rho) {
  const int n = g.n;
  if (rho.rows() != n || rho.cols() != n) {
    throw std::invalid_argument("apply_generator: state dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2) {
      Complex acc = 0.0;
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          acc += rho(i1, i2) * g.g(pair_index(i1, i2, n), pair_index(j1, j2, n));
      out(j1, j2) = acc;
    }
  return out;
}

ComplexMatrix apply_generator(const GeneratorMatrix& g, const DensityMatrix& rho) {
  return apply_generator_linear(g, rho.matrix());
}

std::vector<DensityMatrix> propagate(const std::vector<GeneratorMatrix>& g_series,
                                     const DensityMatrix& rho0) {
  if (g_series.size() < 2) {
    throw std::invalid_argument("propagate: need at least 2 generator samples");
  }
  const int n = g_series.front().n;
  if (rho0.dim() != n) throw std::invalid_argument("propagate: state dimension mismatch");
  for (const GeneratorMatrix& g : g_series) {
    if (g.n != n) throw std::invalid_argument("propagate: inconsistent dimensions");
    if (g.quality == GeneratorQuality::near_singular) {
      throw std::invalid_argument("propagate: near-singular sample at t = " +
                                  std::to_string(g.t));
    }
  }

  const auto tolerances = DensityMatrix::ingestion_tolerances();
  std::vector<DensityMatrix> out;
  out.reserve(g_series.size());
  out.push_back(rho0);

  ComplexMatrix rho = rho0.matrix();
  GeneratorMatrix mid;
  mid.n = n;
  for (std::size_t k = 0; k + 1 < g_series.size(); ++k) {
    const GeneratorMatrix& g0 = g_series[k];
    const GeneratorMatrix& g1 = g_series[k + 1];
    const double h = g1.t - g0.t;
    if (!(h > 0.0)) throw std::invalid_argument("propagate: times must increase");
    mid.g = 0.5 * (g0.g + g1.g);

    const ComplexMatrix k1 = apply_generator_linear(g0, rho);
    const ComplexMatrix k2 = apply_generator_linear(mid, rho + (0.5 * h) * k1);
    const ComplexMatrix k3 = apply_generator_linear(mid, rho + (0.5 * h) * k2);
    const ComplexMatrix k4 = apply_generator_linear(g1, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double drift = std::abs(rho.trace() - Complex(1.0));
    if (drift > 1e-6) {
      throw std::runtime_error("propagate: trace drift " + std::to_string(drift) +
                               " at t = " + std::to_string(g1.t));
    }
    out.emplace_back(rho, tolerances);
  }
  return out;
}

ComplexMatrix two_level_lindblad_generator(double gamma1, double gamma2, double gamma3) {
  ComplexMatrix g = ComplexMatrix::Zero(4, 4);
  const Index p00 = pair_index(0, 0, 2);
  const Index p01 = pair_index(0, 1, 2);
  const Index p10 = pair_index(1, 0, 2);
  const Index p11 = pair_index(1, 1, 2);
  g(p00, p00) = -gamma3;
  g(p00, p11) = gamma3;
  g(p01, p01) = -0.5 * gamma2;
  g(p10, p10) = -0.5 * gamma2;
  g(p11, p11) = -gamma1;
  g(p11, p00) = gamma1;
  return g;
}

TwoLevelRates lindblad_fit_two_level(const GeneratorMatrix& g) {
  if (g.n != 2) throw std::invalid_argument("lindblad_fit_two_level: generator is not 2-level");
  const Index p00 = pair_index(0, 0, 2);
  const Index p01 = pair_index(0, 1, 2);
  const Index p10 = pair_index(1, 0, 2);
  const Index p11 = pair_index(1, 1, 2);

  TwoLevelRates rates;
  rates.gamma1 = -g.g(p11, p11).real();
  rates.gamma2 = -2.0 * g.g(p10, p10).real();
  rates.gamma3 = -g.g(p00, p00).real();
  rates.eta = rates.gamma2 - rates.gamma1 - rates.gamma3;

  double res = 0.0;
  // pattern consistency between the paired real parts
  res = std::max(res, std::abs(g.g(p11, p00).real() - rates.gamma1));
  res = std::max(res, std::abs(g.g(p00, p11).real() - rates.gamma3));
  res = std::max(res, std::abs(g.g(p01, p01).real() - g.g(p10, p10).real()));
  // everything outside the pattern
  const bool on_pattern[4][4] = {
      {true, false, false, true},
      {false, true, false, false},
      {false, false, true, false},
      {true, false, false, true},
  };
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c)
      if (!on_pattern[r][c]) res = std::max(res, std::abs(g.g(r, c)));
  rates.structure_residual = res;
  return rates;
}

}  // namespace liouvrec
