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

#include <functional>
#include <optional>

#include "liouvrec/models.hpp"

namespace liouvrec {

// How the local 5-point derivative cluster treats the left end of the domain.
//   signed_times: cluster stays centered; the source must accept t < t_min
//                 (closed forms and unitary simulations do).
//   one_sided:    forward 4th-order stencil when t - 2h would cross t_min,
//                 for sources defined only on t >= t_min.
enum class EdgePolicy { signed_times, one_sided };

struct DerivativeSpec {
  double h = 1e-3;
  EdgePolicy edge = EdgePolicy::signed_times;
  double t_min = 0.0;  // only consulted by one_sided
};

using ChannelFn = std::function<ProcessMatrix(double)>;

// One reconstructed time sample: the map, the generator solved from it, and
// the two-level relaxation rates when n == 2.
struct RatesSample {
  double t = 0.0;
  ProcessMatrix d;
  GeneratorMatrix g;
  std::optional<TwoLevelRates> rates;
};

// D and dD/dt from five channel evaluations around t, then g = d^-1 d_dot.
RatesSample sample_channel(const ChannelFn& channel, double t, const DerivativeSpec& spec);

// ---------------------------------------------------------------------------
// End-to-end drivers: model -> preparations -> snapshots -> map -> generator.

struct ExampleARun {
  AmplitudeDampingParams params;
  std::vector<RatesSample> samples;
  TomogramSeries tomograms;  // snapshots on the output grid
};

ExampleARun run_example_a(const AmplitudeDampingParams& params, double t_max, int steps,
                          double h_derivative);

struct ExampleBRun {
  JaynesCummingsParams params;
  std::vector<RatesSample> samples;
};

ExampleBRun run_example_b(const JaynesCummingsParams& params, double t_min, double t_max,
                          int steps, double h_derivative);

struct ExampleCRun {
  MultimodeCavityParams params;
  std::vector<RatesSample> samples;
  ScalarSeries p;      // survival probability read off the reconstructed maps
  ScalarSeries gamma;  // relaxation rate read off the generator samples
};

ExampleCRun run_example_c(const MultimodeCavityParams& params, double t_max, int steps,
                          double h_derivative);

// Reconstruction from an ingested tomogram series on its own grid (no cluster
// evaluations; edge samples fall back to the lower-order stencils).
std::vector<RatesSample> run_reconstruct(const TomogramSeries& series);

}  // namespace liouvrec
