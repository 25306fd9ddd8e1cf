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

#include <cmath>

#include <doctest.h>

#include "liouvrec/liouvillian.hpp"
#include "liouvrec/models.hpp"

using namespace liouvrec;

namespace {

std::vector<ProcessMatrix> scalar_series(double t0, double h, std::size_t count,
                                         double (*f)(double)) {
  std::vector<ProcessMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    out.push_back(ProcessMatrix{2, t, f(t) * ComplexMatrix::Identity(4, 4)});
  }
  return out;
}

double deriv_error(const std::vector<ProcessMatrix>& series, std::size_t index,
                   double (*fprime)(double)) {
  const ComplexMatrix d = differentiate_d(series, index);
  return std::abs(d(0, 0).real() - fprime(series[index].t));
}

}  // namespace

TEST_SUITE("differentiation") {
  TEST_CASE("stencil values and orders on sin(t)") {
    const auto f = +[](double t) { return std::sin(t); };
    const auto fp = +[](double t) { return std::cos(t); };

    const double h = 1e-2;
    const auto series = scalar_series(0.3, h, 9, f);
    // interior 5-point: O(h^4)
    CHECK(deriv_error(series, 4, fp) < 2.0 * std::pow(h, 4) / 30.0 + 1e-13);
    // second ring: central 3-point, O(h^2)
    CHECK(deriv_error(series, 1, fp) < h * h / 6.0 + 1e-13);
    // edges: one-sided 3-point, O(h^2)
    CHECK(deriv_error(series, 0, fp) < h * h / 3.0 + 1e-13);
    CHECK(deriv_error(series, 8, fp) < h * h / 3.0 + 1e-13);

    // halving h shrinks the interior error ~16x and the edge error ~4x
    const auto fine = scalar_series(0.3, h / 2.0, 17, f);
    const double ratio_interior = deriv_error(series, 4, fp) / deriv_error(fine, 8, fp);
    const double ratio_edge = deriv_error(series, 0, fp) / deriv_error(fine, 0, fp);
    CHECK(ratio_interior == doctest::Approx(16.0).epsilon(0.15));
    CHECK(ratio_edge == doctest::Approx(4.0).epsilon(0.15));
  }

  TEST_CASE("grid validation") {
    auto series = scalar_series(0.0, 0.1, 5, +[](double t) { return t; });
    series[3].t += 0.01;
    CHECK_THROWS_WITH_AS(differentiate_d(series, 2), doctest::Contains("uniform"),
                         std::invalid_argument);
    CHECK_THROWS_AS(
        differentiate_d(scalar_series(0.0, 0.1, 2, +[](double t) { return t; }), 0),
        std::invalid_argument);
  }
}

TEST_SUITE("generator reconstruction") {
  TEST_CASE("closed-form decay map yields the canonical generator") {
    const double gamma = 1.0;
    const double t = 0.7;
    const double e = std::exp(-gamma * t);
    const double s = std::exp(-0.5 * gamma * t);

    ProcessMatrix d{2, t, ComplexMatrix::Zero(4, 4)};
    d.d(0, 0) = 1.0;
    d.d(1, 1) = s;
    d.d(2, 2) = s;
    d.d(3, 0) = 1.0 - e;
    d.d(3, 3) = e;

    ComplexMatrix d_dot = ComplexMatrix::Zero(4, 4);
    d_dot(1, 1) = -0.5 * gamma * s;
    d_dot(2, 2) = -0.5 * gamma * s;
    d_dot(3, 0) = gamma * e;
    d_dot(3, 3) = -gamma * e;

    const GeneratorMatrix g = reconstruct_g(d, d_dot);
    CHECK(g.quality == GeneratorQuality::ok);
    CHECK(g.t == t);
    CHECK(approx_equal(g.g, two_level_lindblad_generator(gamma, gamma, 0.0), 1e-12));
  }

  TEST_CASE("near-singular maps are flagged, not regularized") {
    ProcessMatrix d = identity_process(2, 1.0);
    d.d(3, 3) = 1e-11;
    const GeneratorMatrix g = reconstruct_g(d, ComplexMatrix::Zero(4, 4));
    CHECK(g.quality == GeneratorQuality::near_singular);
    CHECK(g.condition_of_d >= 1e10);

    const GeneratorMatrix ok = reconstruct_g(identity_process(2), ComplexMatrix::Zero(4, 4));
    CHECK(ok.quality == GeneratorQuality::ok);
    CHECK(ok.condition_of_d == doctest::Approx(1.0));
  }

  TEST_CASE("invariant checks name the failure") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(0.4, 0.9, 0.1);
    const GeneratorValidation clean = validate_generator(g);
    CHECK(clean.pass());
    CHECK(clean.first_failure().empty());

    g.g(3, 0) += 1e-5;  // population leaves the trace
    const GeneratorValidation broken = validate_generator(g);
    CHECK_FALSE(broken.pass());
    CHECK(broken.first_failure() == "trace_rows");
    CHECK(broken.trace_rows.residual == doctest::Approx(1e-5));

    g.g = two_level_lindblad_generator(0.4, 0.9, 0.1);
    g.g(1, 1) += Complex(0.0, 1e-4);  // coherence rows must be conjugates
    CHECK(validate_generator(g).first_failure() == "conjugation");
  }
}

TEST_SUITE("generator application") {
  TEST_CASE("decay generator on the excited state") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(1.0, 1.0, 0.0);

    const DensityMatrix excited = DensityMatrix::pure(ComplexVector::Unit(2, 1));
    const ComplexMatrix rhs = apply_generator(g, excited);
    CHECK(rhs(0, 0).real() == doctest::Approx(1.0));
    CHECK(rhs(1, 1).real() == doctest::Approx(-1.0));
    CHECK(std::abs(rhs(0, 1)) < 1e-15);
    CHECK(hermiticity_residual(rhs) < 1e-15);
    CHECK(std::abs(rhs.trace()) < 1e-15);
  }

  TEST_CASE("decay generator on a superposition") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(1.0, 1.0, 0.0);
    ComplexVector plus(2);
    plus << 1.0, 1.0;
    const ComplexMatrix rhs = apply_generator(g, DensityMatrix::pure(plus));
    CHECK(rhs(0, 0).real() == doctest::Approx(0.5));
    CHECK(rhs(1, 1).real() == doctest::Approx(-0.5));
    CHECK(rhs(0, 1).real() == doctest::Approx(-0.25));
    CHECK(rhs(1, 0).real() == doctest::Approx(-0.25));
  }

  TEST_CASE("propagation through a constant decay generator") {
    const double gamma = 1.0;
    std::vector<GeneratorMatrix> series;
    const int steps = 3000;
    for (int i = 0; i <= steps; ++i) {
      GeneratorMatrix g;
      g.n = 2;
      g.t = 3.0 * i / steps;
      g.g = two_level_lindblad_generator(gamma, gamma, 0.0);
      series.push_back(std::move(g));
    }
    const auto states = propagate(series, DensityMatrix::pure(ComplexVector::Unit(2, 1)));
    REQUIRE(states.size() == series.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      const double expected = std::exp(-gamma * series[i].t);
      CHECK(std::abs(states[i].matrix()(1, 1).real() - expected) < 1e-8);
      CHECK(std::abs(states[i].matrix().trace() - Complex(1.0)) < 1e-12);
    }
  }

  TEST_CASE("propagation refuses flagged samples") {
    GeneratorMatrix good;
    good.n = 2;
    good.t = 0.0;
    good.g = two_level_lindblad_generator(1.0, 1.0, 0.0);
    GeneratorMatrix bad = good;
    bad.t = 0.1;
    bad.quality = GeneratorQuality::near_singular;
    CHECK_THROWS_WITH_AS(
        propagate({good, bad}, DensityMatrix::pure(ComplexVector::Unit(2, 0))),
        doctest::Contains("near-singular"), std::invalid_argument);
  }
}

TEST_SUITE("relaxation-rate fit") {
  TEST_CASE("round trip through the pattern builder") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(0.3, 0.9, 0.2);
    const TwoLevelRates rates = lindblad_fit_two_level(g);
    CHECK(rates.gamma1 == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(rates.gamma2 == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(rates.gamma3 == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(rates.eta == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(rates.structure_residual == 0.0);
  }

  TEST_CASE("off-pattern weight lands in the residual") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(1.0, 1.0, 0.0);
    g.g(1, 2) = 3e-4;
    const TwoLevelRates rates = lindblad_fit_two_level(g);
    CHECK(rates.structure_residual == doctest::Approx(3e-4));
    CHECK(rates.gamma1 == doctest::Approx(1.0));
  }

  TEST_CASE("frequency shifts do not contaminate the rates") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(0.5, 0.5, 0.0);
    g.g(2, 2) += Complex(0.0, 2e-3);   // oscillation on the coherence decay
    g.g(1, 1) += Complex(0.0, -2e-3);  // conjugate partner
    const TwoLevelRates rates = lindblad_fit_two_level(g);
    CHECK(rates.gamma2 == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rates.structure_residual == 0.0);
  }

  TEST_CASE("pattern builder rows are trace-free") {
    GeneratorMatrix g;
    g.n = 2;
    g.g = two_level_lindblad_generator(0.7, 1.3, 0.4);
    CHECK(validate_generator(g).pass());
  }

  TEST_CASE("only defined for two-level generators") {
    GeneratorMatrix g;
    g.n = 3;
    g.g = ComplexMatrix::Zero(9, 9);
    CHECK_THROWS_AS(lindblad_fit_two_level(g), std::invalid_argument);
  }
}
