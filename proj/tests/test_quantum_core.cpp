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
#include <random>

#include <doctest.h>

#include "liouvrec/quantum.hpp"

using namespace liouvrec;

namespace {

ComplexMatrix random_hermitian(Index dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c) m(r, c) = Complex(dist(rng), dist(rng));
  return Complex(0.5) * (m + m.adjoint().eval());
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("pair_index flattens row-major") {
    CHECK(pair_index(0, 0, 2) == 0);
    CHECK(pair_index(0, 1, 2) == 1);
    CHECK(pair_index(1, 0, 2) == 2);
    CHECK(pair_index(1, 1, 2) == 3);
    CHECK(pair_index(2, 1, 3) == 7);
  }

  TEST_CASE("kron places blocks by the left factor") {
    // raising operator (x) lowering operator, 3-level mode
    ComplexMatrix sp = ComplexMatrix::Zero(2, 2);
    sp(1, 0) = 1.0;
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 1) = 1.0;
    a(1, 2) = std::sqrt(2.0);
    const ComplexMatrix k = kron(sp, a);
    REQUIRE(k.rows() == 6);
    CHECK(k(3, 1) == Complex(1.0));
    CHECK(std::abs(k(4, 2) - Complex(std::sqrt(2.0))) < 1e-15);
    CHECK(k.cwiseAbs().sum() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("hermiticity residual") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, 1.0);
    m(1, 0) = Complex(0.0, 1.0);  // should be -i to be Hermitian
    CHECK(hermiticity_residual(m) == doctest::Approx(2.0));
    CHECK(hermiticity_residual(random_hermitian(5, 11)) < 1e-15);
  }

  TEST_CASE("trace distance of orthogonal pure states is 1") {
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    CHECK(trace_distance(p0, p1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace_distance(p0, p0) == doctest::Approx(0.0));
    const ComplexMatrix mixed = 0.5 * (p0 + p1);
    CHECK(trace_distance(mixed, p0) == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("hermitian_eigensystem rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigensystem(m), std::invalid_argument);
  }

  TEST_CASE("eigensystem residual stays tiny") {
    const ComplexMatrix h = random_hermitian(8, 42);
    const auto eig = hermitian_eigensystem(h);
    CHECK(eig.residual <= 1e-9 * std::max(1.0, max_abs(h)));
    // completeness: V V^dag = 1
    CHECK(max_abs(eig.vectors * eig.vectors.adjoint() -
                  ComplexMatrix::Identity(8, 8)) < 1e-13);
  }

  TEST_CASE("condition number of a known diagonal") {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 4.0;
    m(1, 1) = 2.0;
    m(2, 2) = 0.5;
    CHECK(condition_number(m) == doctest::Approx(8.0).epsilon(1e-12));
  }

  TEST_CASE("uniform grid hits both endpoints exactly") {
    const auto g = uniform_grid(0.25, 1.75, 6);
    REQUIRE(g.size() == 7);
    CHECK(g.front() == 0.25);
    CHECK(g.back() == 1.75);
    CHECK(g[3] == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_SUITE("density matrix") {
  TEST_CASE("accepts a clean state and exposes it") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = Complex(0.0, -0.5);
    m(1, 0) = Complex(0.0, 0.5);
    const DensityMatrix rho(m);
    CHECK(rho.dim() == 2);
    CHECK(max_abs(rho.matrix() - m) == 0.0);
  }

  TEST_CASE("rejects trace, hermiticity, and positivity violations") {
    ComplexMatrix bad_trace = ComplexMatrix::Identity(2, 2) * Complex(0.5 + 1e-8);
    CHECK_THROWS_WITH_AS(DensityMatrix{bad_trace}, doctest::Contains("trace"),
                         std::invalid_argument);

    ComplexMatrix bad_herm = ComplexMatrix::Zero(2, 2);
    bad_herm(0, 0) = 1.0;
    bad_herm(0, 1) = 1e-7;
    CHECK_THROWS_WITH_AS(DensityMatrix{bad_herm}, doctest::Contains("hermiticity"),
                         std::invalid_argument);

    ComplexMatrix bad_eig = ComplexMatrix::Zero(2, 2);
    bad_eig(0, 0) = 1.5;
    bad_eig(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(DensityMatrix{bad_eig}, doctest::Contains("eigenvalue"),
                         std::invalid_argument);
  }

  TEST_CASE("ingestion tolerances admit mildly noisy states") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0 + 5e-7;
    m(1, 1) = -3e-7;
    CHECK_THROWS(DensityMatrix(m));
    CHECK_NOTHROW(DensityMatrix(m, DensityMatrix::ingestion_tolerances()));
  }

  TEST_CASE("pure() normalizes") {
    ComplexVector psi(2);
    psi << Complex(3.0, 0.0), Complex(0.0, 4.0);
    const DensityMatrix rho = DensityMatrix::pure(psi);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.36).epsilon(1e-14));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.64).epsilon(1e-14));
    CHECK(rho.matrix()(0, 1) == Complex(0.0, -0.48));
  }
}

TEST_SUITE("partial trace") {
  TEST_CASE("maximally entangled pair reduces to the maximally mixed state") {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);  // |0>|0>
    bell(3) = 1.0 / std::sqrt(2.0);  // |1>|1>
    const DensityMatrix rho = DensityMatrix::pure(bell);
    const DensityMatrix sys = partial_trace(rho, 2, 2, Subsystem::system);
    const DensityMatrix env = partial_trace(rho, 2, 2, Subsystem::environment);
    const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
    CHECK(max_abs(sys.matrix() - half) < 1e-15);
    CHECK(max_abs(env.matrix() - half) < 1e-15);
  }

  TEST_CASE("product state splits cleanly") {
    // |0>_S |1>_E with dim_e = 2 -> composite index 1
    ComplexVector psi = ComplexVector::Zero(4);
    psi(1) = 1.0;
    const DensityMatrix rho = DensityMatrix::pure(psi);
    CHECK(partial_trace(rho, 2, 2, Subsystem::system).matrix()(0, 0) == Complex(1.0));
    CHECK(partial_trace(rho, 2, 2, Subsystem::environment).matrix()(1, 1) == Complex(1.0));
  }

  TEST_CASE("linear extension handles non-Hermitian operators") {
    // |0><1|_S (x) |0><0|_E
    ComplexMatrix op = ComplexMatrix::Zero(4, 4);
    op(0, 2) = 1.0;
    const ComplexMatrix sys = partial_trace_linear(op, 2, 2, Subsystem::system);
    CHECK(sys(0, 1) == Complex(1.0));
    CHECK(std::abs(sys(1, 0)) + std::abs(sys(0, 0)) + std::abs(sys(1, 1)) == 0.0);
  }

  TEST_CASE("dimension mismatch throws") {
    const DensityMatrix rho = DensityMatrix::pure(ComplexVector::Unit(4, 0));
    CHECK_THROWS_AS(partial_trace(rho, 3, 2, Subsystem::system), std::invalid_argument);
  }
}

TEST_SUITE("propagation") {
  TEST_CASE("exp(-i sigma_x t) rotates the ground state") {
    ComplexMatrix sx = ComplexMatrix::Zero(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    const HermitianPropagator prop(sx);
    const double t = std::acos(-1.0) / 3.0;  // pi/3
    const ComplexVector psi = prop.state(ComplexVector::Unit(2, 0), t);
    CHECK(std::abs(psi(0) - Complex(0.5)) < 1e-14);                // cos(pi/3)
    CHECK(std::abs(psi(1) - Complex(0.0, -0.8660254037844386)) < 1e-14);
    // half rotation maps |0><0| onto |1><1|
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    const ComplexMatrix rotated = prop.conjugate(p0, std::acos(-1.0) / 2.0);
    CHECK(std::abs(rotated(1, 1) - Complex(1.0)) < 1e-14);
  }

  TEST_CASE("unitary at t = 0 is the identity") {
    const HermitianPropagator prop(random_hermitian(6, 7));
    CHECK(max_abs(prop.unitary(0.0) - ComplexMatrix::Identity(6, 6)) < 1e-13);
  }

  TEST_CASE("evolve dephases a superposition at the bare frequency") {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(1, 1) = 1.0;
    const auto model = make_hamiltonian_model(2, 1, h);
    ComplexVector plus(2);
    plus << 1.0, 1.0;
    const double t = 0.9;
    const DensityMatrix rho_t = evolve(model, DensityMatrix::pure(plus), t);
    // rho_01(t) = exp(+i t) / 2
    CHECK(std::abs(rho_t.matrix()(0, 1) - 0.5 * std::exp(kI * t)) < 1e-14);
    CHECK(rho_t.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
  }

  TEST_CASE("model validation") {
    CHECK_THROWS_AS(make_hamiltonian_model(2, 2, ComplexMatrix::Zero(3, 3)),
                    std::invalid_argument);
    ComplexMatrix skew = ComplexMatrix::Zero(4, 4);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(make_hamiltonian_model(2, 2, skew), std::invalid_argument);
  }
}
