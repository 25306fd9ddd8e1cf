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

#include "liouvrec/pipeline.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace liouvrec {

namespace {

RatesSample finish_sample(ProcessMatrix d, const ComplexMatrix& d_dot) {
  RatesSample sample;
  sample.t = d.t;
  sample.g = reconstruct_g(d, d_dot);
  sample.d = std::move(d);
  if (sample.d.n == 2) sample.rates = lindblad_fit_two_level(sample.g);
  return sample;
}

}  // namespace

RatesSample sample_channel(const ChannelFn& channel, double t, const DerivativeSpec& spec) {
  if (!(spec.h > 0.0)) throw std::invalid_argument("sample_channel: h must be positive");
  const double h = spec.h;

  if (spec.edge == EdgePolicy::one_sided && t - 2.0 * h < spec.t_min) {
    // forward 4th-order stencil anchored at t
    const ProcessMatrix d0 = channel(t);
    const ComplexMatrix d_dot =
        (-25.0 * d0.d + 48.0 * channel(t + h).d - 36.0 * channel(t + 2.0 * h).d +
         16.0 * channel(t + 3.0 * h).d - 3.0 * channel(t + 4.0 * h).d) /
        (12.0 * h);
    return finish_sample(d0, d_dot);
  }

  const ProcessMatrix d0 = channel(t);
  const ComplexMatrix d_dot = (channel(t - 2.0 * h).d - 8.0 * channel(t - h).d +
                               8.0 * channel(t + h).d - channel(t + 2.0 * h).d) /
                              (12.0 * h);
  return finish_sample(d0, d_dot);
}

ExampleARun run_example_a(const AmplitudeDampingParams& params, double t_max, int steps,
                          double h_derivative) {
  const MMatrix m = build_m(2);
  const ChannelFn channel = [&params, &m](double t) {
    return d_from_tomograms(amplitude_damping_tomograms(params, {t}), m, 0);
  };
  DerivativeSpec spec;
  spec.h = h_derivative;
  spec.edge = EdgePolicy::one_sided;
  spec.t_min = 0.0;

  ExampleARun run;
  run.params = params;
  const std::vector<double> grid = uniform_grid(0.0, t_max, steps);
  run.samples.reserve(grid.size());
  for (double t : grid) run.samples.push_back(sample_channel(channel, t, spec));
  run.tomograms = amplitude_damping_tomograms(params, grid);
  return run;
}

ExampleBRun run_example_b(const JaynesCummingsParams& params, double t_min, double t_max,
                          int steps, double h_derivative) {
  if (params.omega_a != params.omega) {
    throw std::invalid_argument("run_example_b: requires omega_a == omega");
  }
  const Index dim_e = jc_field_dim(params);
  ComplexVector fock = ComplexVector::Zero(dim_e);
  fock(params.fock_m) = 1.0;
  const CompositeChannel composite(jc_model(params), DensityMatrix::pure(fock));
  const MMatrix m = build_m(2);
  const ChannelFn channel = [&composite, &m](double t) {
    return d_from_tomograms(composite.tomograms({t}), m, 0);
  };
  DerivativeSpec spec;
  spec.h = h_derivative;
  spec.edge = EdgePolicy::signed_times;

  ExampleBRun run;
  run.params = params;
  const std::vector<double> grid = uniform_grid(t_min, t_max, steps);
  run.samples.reserve(grid.size());
  for (double t : grid) run.samples.push_back(sample_channel(channel, t, spec));
  return run;
}

ExampleCRun run_example_c(const MultimodeCavityParams& params, double t_max, int steps,
                          double h_derivative) {
  const MultimodeCavity cavity(params, Frame::rotating);
  const MMatrix m = build_m(2);
  const auto basis = input_basis(2);
  const ChannelFn channel = [&cavity, &m, &basis](double t) {
    const ProcessMatrix exact = cavity.channel(t);
    TomogramSeries series;
    series.n = 2;
    series.times = {t};
    series.snapshots.resize(basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p) {
      series.snapshots[p].push_back(
          apply_process(exact, DensityMatrix::pure(basis[p].amplitudes)));
    }
    return d_from_tomograms(series, m, 0);
  };
  DerivativeSpec spec;
  spec.h = h_derivative;
  spec.edge = EdgePolicy::signed_times;

  ExampleCRun run;
  run.params = params;
  const std::vector<double> grid = uniform_grid(0.0, t_max, steps);
  const Index p11 = pair_index(1, 1, 2);
  run.samples.reserve(grid.size());
  for (double t : grid) {
    RatesSample sample = sample_channel(channel, t, spec);
    run.p.times.push_back(t);
    run.p.values.push_back(sample.d.d(p11, p11).real());
    run.gamma.times.push_back(t);
    run.gamma.values.push_back(sample.rates ? sample.rates->gamma1
                                            : std::numeric_limits<double>::quiet_NaN());
    run.samples.push_back(std::move(sample));
  }
  return run;
}

std::vector<RatesSample> run_reconstruct(const TomogramSeries& series) {
  check_tomogram_series(series);
  if (series.times.size() < 3) {
    throw std::invalid_argument("run_reconstruct: need at least 3 time samples");
  }
  const MMatrix m = build_m(series.n);
  std::vector<ProcessMatrix> d_series;
  d_series.reserve(series.times.size());
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    d_series.push_back(d_from_tomograms(series, m, i));
  }
  std::vector<RatesSample> out;
  out.reserve(d_series.size());
  for (std::size_t i = 0; i < d_series.size(); ++i) {
    out.push_back(finish_sample(d_series[i], differentiate_d(d_series, i)));
  }
  return out;
}

}  // namespace liouvrec
