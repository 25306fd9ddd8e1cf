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

#include "liouvrec/cli.hpp"

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liouvrec/output.hpp"
#include "liouvrec/tomogram_io.hpp"

namespace liouvrec::cli {

namespace {

struct CommonOptions {
  std::string out = "-";
  std::string format = "csv";
  double h_derivative = 1e-3;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_h = true) {
  cmd->add_option("--out", opts->out, "output path, '-' for stdout")
      ->capture_default_str();
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  if (with_h) {
    cmd->add_option("--h-derivative", opts->h_derivative,
                    "step of the local derivative cluster")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

// Emitted samples must satisfy the generator invariants unless flagged.
int check_samples(const std::vector<RatesSample>& samples) {
  for (const RatesSample& s : samples) {
    if (s.g.quality != GeneratorQuality::ok) continue;
    const GeneratorValidation report = validate_generator(s.g);
    if (!report.pass()) {
      std::fprintf(stderr, "generator at t = %.17g violates '%s'\n", s.t,
                   report.first_failure().c_str());
      return 1;
    }
  }
  return 0;
}

int emit(const std::vector<RatesSample>& samples, const CommonOptions& opts,
         const ScalarSeries* survival = nullptr) {
  write_table(opts.out, opts.format, table_from_samples(samples, survival));
  return check_samples(samples);
}

int run_validate(const std::string& input) {
  const TomogramSeries series = read_tomogram_file(input);
  const MMatrix m = build_m(series.n);
  bool all_ok = true;
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    try {
      const ProcessMatrix d = d_from_tomograms(series, m, i);
      std::printf("t = %.17g: ok (cond = %.3g)\n", series.times[i],
                  condition_number(d.d));
    } catch (const std::exception& e) {
      std::printf("t = %.17g: FAIL (%s)\n", series.times[i], e.what());
      all_ok = false;
    }
  }
  std::printf("%s: %zu preparations, %zu times: %s\n", input.c_str(),
              series.snapshots.size(), series.times.size(),
              all_ok ? "all checks passed" : "violations found");
  return all_ok ? 0 : 1;
}

}  // namespace

int run_main(int argc, const char* const* argv) {
  CLI::App app{"Reconstructs the time-local generator of reduced quantum dynamics "
               "from tomographic snapshot series"};
  app.require_subcommand(1);

  // example-a
  auto* cmd_a = app.add_subcommand(
      "example-a", "two-level decay: closed-form snapshots through the full pipeline");
  AmplitudeDampingParams a_params;
  double a_t_max = 5.0;
  int a_steps = 500;
  std::string a_export;
  CommonOptions a_opts;
  cmd_a->add_option("--gamma", a_params.gamma, "population decay rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_a->add_option("--t-max", a_t_max, "end of the output grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_a->add_option("--steps", a_steps, "output grid steps")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  cmd_a->add_option("--export-tomograms", a_export,
                    "also write the snapshot series to this JSON file");
  add_common(cmd_a, &a_opts);

  // example-b
  auto* cmd_b = app.add_subcommand(
      "example-b", "atom exchanging one quantum with a prepared mode (resonant, "
                   "rotating frame)");
  JaynesCummingsParams b_params;
  double b_t_min = 0.0;
  double b_t_max = 0.4 * std::numbers::pi;
  int b_steps = 500;
  CommonOptions b_opts;
  cmd_b->add_option("--fock-m", b_params.fock_m, "mode photon number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_b->add_option("--lambda", b_params.lambda, "coupling strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_b->add_option("--n-max", b_params.n_max,
                    "field truncation (-1 selects fock_m + 1)")
      ->capture_default_str();
  cmd_b->add_option("--t-min", b_t_min, "start of the output grid")->capture_default_str();
  cmd_b->add_option("--t-max", b_t_max, "end of the output grid")->capture_default_str();
  cmd_b->add_option("--steps", b_steps, "output grid steps")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  add_common(cmd_b, &b_opts);

  // example-c
  auto* cmd_c = app.add_subcommand(
      "example-c", "atom coupled to a cavity mode comb, single-excitation sector");
  MultimodeCavityParams c_params;
  double c_t_max = 10.0;
  int c_steps = 1000;
  std::string c_parity = "odd";
  CommonOptions c_opts;
  cmd_c->add_option("--modes", c_params.modes, "highest mode index")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  cmd_c->add_option("--lambda", c_params.lambda, "uniform coupling strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_c->add_option("--omega-a", c_params.omega_a, "atomic transition frequency")
      ->capture_default_str();
  cmd_c->add_option("--length", c_params.length, "cavity length (sets the comb spacing)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_c->add_option("--light-speed", c_params.light_speed, "propagation speed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_c->add_option("--parity", c_parity, "which modes couple")
      ->check(CLI::IsMember({"odd", "all"}))
      ->capture_default_str();
  cmd_c->add_option("--t-max", c_t_max, "end of the output grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_c->add_option("--steps", c_steps, "output grid steps")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  add_common(cmd_c, &c_opts);

  // reconstruct
  auto* cmd_r = app.add_subcommand("reconstruct",
                                   "generator series from an ingested tomogram file");
  std::string r_input;
  CommonOptions r_opts;
  cmd_r->add_option("--input", r_input, "tomogram JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(cmd_r, &r_opts, /*with_h=*/false);

  // validate
  auto* cmd_v = app.add_subcommand("validate",
                                   "check a tomogram file against the map invariants");
  std::string v_input;
  cmd_v->add_option("--input", v_input, "tomogram JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cmd_a->parsed()) {
      const ExampleARun run = run_example_a(a_params, a_t_max, a_steps, a_opts.h_derivative);
      if (!a_export.empty()) write_tomogram_file(a_export, run.tomograms);
      return emit(run.samples, a_opts);
    }
    if (cmd_b->parsed()) {
      const ExampleBRun run =
          run_example_b(b_params, b_t_min, b_t_max, b_steps, b_opts.h_derivative);
      return emit(run.samples, b_opts);
    }
    if (cmd_c->parsed()) {
      c_params.parity = (c_parity == "odd") ? ModeParity::odd_only : ModeParity::all;
      const ExampleCRun run = run_example_c(c_params, c_t_max, c_steps, c_opts.h_derivative);
      return emit(run.samples, c_opts, &run.p);
    }
    if (cmd_r->parsed()) {
      return emit(run_reconstruct(read_tomogram_file(r_input)), r_opts);
    }
    if (cmd_v->parsed()) {
      return run_validate(v_input);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace liouvrec::cli
