// Copyright 2026 The rqsp Authors
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

// The serial kernels are the reference; the OpenMP kernels must agree with
// them bit-for-bit semantics aside (we allow 1e-14 slack for reassociation).
// Correctness of the serial kernels themselves is checked against explicit
// matrix arithmetic on small states.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "rqsp/kernels.hpp"
#include "rqsp/pauli.hpp"

using namespace rqsp;
using kernels::Complex;
using kernels::State;

namespace {

State random_state(int qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  State v(std::size_t{1} << qubits);
  double norm2 = 0.0;
  for (auto& a : v) {
    a = Complex(dist(rng), dist(rng));
    norm2 += std::norm(a);
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& a : v) a *= s;
  return v;
}

double max_diff(const State& a, const State& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double norm2(const State& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

TEST_CASE("rotation kernels implement exp(-i theta sigma)") {
  const double th = 0.37;
  const double c = std::cos(th), s = std::sin(th);
  State v{Complex(0.6, 0.0), Complex(0.0, 0.8)};  // one qubit

  SUBCASE("z axis is diag(e^{-i th}, e^{i th})") {
    kernels::serial::apply_rotation(v, 0, 'z', th);
    CHECK(std::abs(v[0] - Complex(0.6, 0.0) * std::exp(Complex(0, -th))) < 1e-15);
    CHECK(std::abs(v[1] - Complex(0.0, 0.8) * std::exp(Complex(0, th))) < 1e-15);
  }
  SUBCASE("x axis mixes with -i sin") {
    State u = v;
    kernels::serial::apply_rotation(u, 0, 'x', th);
    CHECK(std::abs(u[0] - (c * v[0] - Complex(0, s) * v[1])) < 1e-15);
    CHECK(std::abs(u[1] - (c * v[1] - Complex(0, s) * v[0])) < 1e-15);
  }
  SUBCASE("y axis mixes with real sin") {
    State u = v;
    kernels::serial::apply_rotation(u, 0, 'y', th);
    CHECK(std::abs(u[0] - (c * v[0] - s * v[1])) < 1e-15);
    CHECK(std::abs(u[1] - (s * v[0] + c * v[1])) < 1e-15);
  }
}

TEST_CASE("rotation on a middle qubit touches only paired amplitudes") {
  State v = random_state(4, 5);
  State u = v;
  kernels::serial::apply_rotation(u, 2, 'z', 0.9);
  for (size_t i = 0; i < v.size(); ++i) {
    const double phase = (i >> 2) & 1 ? 0.9 : -0.9;
    CHECK(std::abs(u[i] - v[i] * std::exp(Complex(0, phase))) < 1e-15);
  }
}

TEST_CASE("controlled rotation acts only in the control-excited half") {
  State v = random_state(5, 6);
  State u = v;
  kernels::serial::apply_controlled_rotation(u, 4, 1, 'y', 0.44);
  State expected = v;
  // build expectation by rotating the full vector, then restoring control=0 half
  State rotated = v;
  kernels::serial::apply_rotation(rotated, 1, 'y', 0.44);
  for (size_t i = 0; i < v.size(); ++i)
    expected[i] = (i >> 4) & 1 ? rotated[i] : v[i];
  CHECK(max_diff(u, expected) < 1e-15);
}

TEST_CASE("apply_pauli matches operator definition on basis states") {
  // Y on qubit 0 of |0> -> i|1>; on |1> -> -i|0>
  State v{Complex(1, 0), Complex(0, 0)};
  kernels::serial::apply_pauli(v, compile_pauli("Y", 0));
  CHECK(std::abs(v[1] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(v[0]) < 1e-15);

  // XZ on |01>: X flips qubit 0, Z phases qubit 1 (here 0) -> |00>
  State w(4, Complex(0, 0));
  w[1] = Complex(1, 0);
  kernels::serial::apply_pauli(w, compile_pauli("XZ", 0));
  CHECK(std::abs(w[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("apply_pauli squares to identity") {
  for (const char* p : {"X", "Y", "Z", "XYZ", "YY", "ZXZY"}) {
    const PauliMasks m = compile_pauli(p, 0);
    State v = random_state(4, 17);
    State u = v;
    kernels::serial::apply_pauli(u, m);
    kernels::serial::apply_pauli(u, m);
    CHECK(max_diff(u, v) < 1e-14);
  }
}

TEST_CASE("controlled pauli is identity on the control-0 half") {
  const PauliMasks m = compile_pauli("XY", 0);
  State v = random_state(4, 9);
  State u = v;
  kernels::serial::apply_controlled_pauli(u, 3, m);
  for (size_t i = 0; i < v.size(); ++i)
    if (!((i >> 3) & 1)) CHECK(u[i] == v[i]);
  // and squares to identity overall
  kernels::serial::apply_controlled_pauli(u, 3, m);
  CHECK(max_diff(u, v) < 1e-14);
}

TEST_CASE("ohe rotation maps vacuum to the amplitude vector and back") {
  const std::vector<int> reg{0, 1, 2};
  const std::vector<double> amps{0.6, 0.48, 0.64};
  State v(8, Complex(0, 0));
  v[0] = Complex(1, 0);
  kernels::serial::apply_ohe_rotation(v, reg, amps, false, -1);
  CHECK(std::abs(v[0]) < 1e-15);
  CHECK(std::abs(v[1] - Complex(0.6, 0)) < 1e-15);   // atom 0 excited
  CHECK(std::abs(v[2] - Complex(0.48, 0)) < 1e-15);  // atom 1
  CHECK(std::abs(v[4] - Complex(0.64, 0)) < 1e-15);  // atom 2
  CHECK(std::abs(v[3]) + std::abs(v[5]) + std::abs(v[6]) + std::abs(v[7]) < 1e-15);

  // forward again: the encoded vector returns to -|vacuum>
  kernels::serial::apply_ohe_rotation(v, reg, amps, false, -1);
  CHECK(std::abs(v[0] + Complex(1, 0)) < 1e-14);
  for (size_t i = 1; i < 8; ++i) CHECK(std::abs(v[i]) < 1e-14);
}

TEST_CASE("ohe rotation dagger inverts forward on arbitrary states") {
  const std::vector<int> reg{1, 3, 4};
  const std::vector<double> amps{std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.5)};
  State v = random_state(6, 21);
  State u = v;
  kernels::serial::apply_ohe_rotation(u, reg, amps, false, -1);
  CHECK(norm2(u) == doctest::Approx(1.0).epsilon(1e-12));
  kernels::serial::apply_ohe_rotation(u, reg, amps, true, -1);
  CHECK(max_diff(u, v) < 1e-13);
}

TEST_CASE("ohe rotation leaves multi-excitation components alone") {
  const std::vector<int> reg{0, 1};
  const std::vector<double> amps{0.6, 0.8};
  State v(4, Complex(0, 0));
  v[3] = Complex(1, 0);  // both atoms excited: outside the rotation plane
  State u = v;
  kernels::serial::apply_ohe_rotation(u, reg, amps, false, -1);
  CHECK(max_diff(u, v) < 1e-15);
}

TEST_CASE("ohe rotation with control acts on the excited half only") {
  const std::vector<int> reg{0, 1};
  const std::vector<double> amps{1.0, 0.0};
  State v = random_state(3, 33);
  State u = v;
  kernels::serial::apply_ohe_rotation(u, reg, amps, false, 2);
  for (size_t i = 0; i < v.size(); ++i)
    if (!((i >> 2) & 1)) CHECK(u[i] == v[i]);
}

TEST_CASE("zero-amplitude drive is the identity; unnormalized drives throw") {
  const std::vector<int> reg{0, 1};
  State v = random_state(3, 41);
  State u = v;
  kernels::serial::apply_ohe_rotation(u, reg, {0.0, 0.0}, false, -1);
  CHECK(max_diff(u, v) == 0.0);
  CHECK_THROWS_AS(
      kernels::serial::apply_ohe_rotation(u, reg, {0.5, 0.5}, false, -1),
      std::invalid_argument);
}

TEST_CASE("zero sector flip negates exactly the vacuum rows of the register") {
  const std::vector<int> reg{1, 2};
  State v = random_state(4, 55);
  State u = v;
  kernels::serial::apply_zero_sector_flip(u, reg, -1);
  for (size_t i = 0; i < v.size(); ++i) {
    const bool vacuum = ((i >> 1) & 1) == 0 && ((i >> 2) & 1) == 0;
    CHECK(u[i] == (vacuum ? -v[i] : v[i]));
  }
}

TEST_CASE("phase flip is global or controlled") {
  State v = random_state(3, 60);
  State u = v;
  kernels::serial::apply_phase_flip(u, -1);
  for (size_t i = 0; i < v.size(); ++i) CHECK(u[i] == -v[i]);
  u = v;
  kernels::serial::apply_phase_flip(u, 0);
  for (size_t i = 0; i < v.size(); ++i)
    CHECK(u[i] == ((i & 1) ? -v[i] : v[i]));
}

TEST_CASE("omp kernels agree with serial kernels on random states") {
  const int qubits = 10;
  kernels::set_max_threads(4);

  SUBCASE("rotations") {
    for (char axis : {'x', 'y', 'z'}) {
      State a = random_state(qubits, 70);
      State b = a;
      kernels::serial::apply_rotation(a, 5, axis, 1.234);
      kernels::omp::apply_rotation(b, 5, axis, 1.234);
      CHECK(max_diff(a, b) < 1e-14);
      kernels::serial::apply_controlled_rotation(a, 9, 2, axis, -0.77);
      kernels::omp::apply_controlled_rotation(b, 9, 2, axis, -0.77);
      CHECK(max_diff(a, b) < 1e-14);
    }
  }
  SUBCASE("paulis") {
    const PauliMasks m = compile_pauli("XYZZYX", 2);
    State a = random_state(qubits, 71);
    State b = a;
    kernels::serial::apply_pauli(a, m);
    kernels::omp::apply_pauli(b, m);
    CHECK(max_diff(a, b) < 1e-14);
    kernels::serial::apply_controlled_pauli(a, 0, m);
    kernels::omp::apply_controlled_pauli(b, 0, m);
    CHECK(max_diff(a, b) < 1e-14);
  }
  SUBCASE("ohe rotations and flips") {
    const std::vector<int> reg{3, 4, 6, 8};
    const std::vector<double> amps{0.5, 0.5, 0.5, 0.5};
    State a = random_state(qubits, 72);
    State b = a;
    kernels::serial::apply_ohe_rotation(a, reg, amps, false, 1);
    kernels::omp::apply_ohe_rotation(b, reg, amps, false, 1);
    CHECK(max_diff(a, b) < 1e-14);
    kernels::serial::apply_ohe_rotation(a, reg, amps, true, -1);
    kernels::omp::apply_ohe_rotation(b, reg, amps, true, -1);
    CHECK(max_diff(a, b) < 1e-14);
    kernels::serial::apply_zero_sector_flip(a, reg, 1);
    kernels::omp::apply_zero_sector_flip(b, reg, 1);
    CHECK(max_diff(a, b) == 0.0);
    kernels::serial::apply_phase_flip(a, 2);
    kernels::omp::apply_phase_flip(b, 2);
    CHECK(max_diff(a, b) == 0.0);
  }

  kernels::set_max_threads(0);
}

TEST_CASE("dispatch wrappers run both paths") {
  State a = random_state(12, 80);
  State b = a;
  kernels::apply_rotation(a, 3, 'y', 0.5, kernels::Impl::Serial);
  kernels::apply_rotation(b, 3, 'y', 0.5, kernels::Impl::Omp);
  CHECK(max_diff(a, b) < 1e-14);
  State c = a;
  kernels::apply_rotation(c, 3, 'y', -0.5, kernels::Impl::Auto);
  kernels::apply_rotation(a, 3, 'y', -0.5, kernels::Impl::Serial);
  CHECK(max_diff(a, c) < 1e-14);
}
