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

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "rqsp/qsp.hpp"
#include "rqsp/util.hpp"

using namespace rqsp;

namespace {

// Chebyshev polynomial of the first kind by the recurrence, as an
// independent oracle for the iterate powers.
double chebyshev_t(int n, double x) {
  double prev = 1.0, cur = x;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> sample_points() {
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(-1.0 + 2.0 * i / 40.0);
  return xs;
}

}  // namespace

TEST_CASE("the iterate is unitary and has determinant 1") {
  for (double x : sample_points()) {
    const Mat2 m = qsp_iterate(x);
    const Complex det = m[0] * m[3] - m[1] * m[2];
    CHECK(std::abs(det - Complex(1, 0)) < 1e-14);
    // columns orthonormal
    CHECK(std::abs(std::norm(m[0]) + std::norm(m[2]) - 1.0) < 1e-14);
    CHECK(std::abs(std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3]) < 1e-14);
  }
  CHECK_THROWS(qsp_iterate(1.5));
}

TEST_CASE("all-zero phases implement the Chebyshev polynomial T_n") {
  for (int n : {1, 2, 3, 5, 8, 13}) {
    QspSequence seq;
    seq.phases.assign(static_cast<size_t>(n) + 1, 0.0);
    for (double x : sample_points()) {
      const Complex p = qsp_evaluate(seq, x);
      CHECK(std::abs(p.imag()) < 1e-12);
      CHECK(p.real() == doctest::Approx(chebyshev_t(n, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("a known two-iterate sequence gives 2x^2 - 1") {
  QspSequence seq;
  seq.phases = {0.0, 0.0, 0.0};
  CHECK(qsp_evaluate(seq, 0.3).real() == doctest::Approx(2 * 0.09 - 1.0));
  CHECK(std::abs(qsp_evaluate(seq, 1.0) - Complex(1, 0)) < 1e-13);
  CHECK(std::abs(qsp_evaluate(seq, -1.0) - Complex(1, 0)) < 1e-13);
}

TEST_CASE("phase dressing preserves unitarity for random sequences") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    QspSequence seq;
    const int n = 3 + trial;
    for (int i = 0; i <= n; ++i)
      seq.phases.push_back(2.0 * 3.14159265358979 * uniform01(rng));
    CHECK(qsp_constraint_check(seq, sample_points()) < 1e-12);
  }
}

TEST_CASE("the product degree shows in the endpoint derivative") {
  // |P(x)| <= 1 on [-1,1] for QSP products; T_n saturates it at the ends.
  QspSequence seq;
  seq.phases.assign(7, 0.0);  // T_6
  for (double x : sample_points())
    CHECK(std::abs(qsp_evaluate(seq, x)) <= 1.0 + 1e-12);
}

TEST_CASE("scalar walk model agrees with the polynomial at zero phases") {
  // With all phases zero the exit element reduces to the average of the two
  // branch phases: (1/2)(e^{i n theta} + e^{-i n theta}) = T_n(lambda).
  for (int n : {1, 2, 4, 7}) {
    QspSequence seq;
    seq.phases.assign(static_cast<size_t>(n) + 1, 0.0);
    for (double lam : {-0.9, -0.4, 0.0, 0.3, 0.8, 1.0}) {
      const Complex m = walk_element_model(seq, lam);
      CHECK(m.real() == doctest::Approx(chebyshev_t(n, lam)).epsilon(1e-10));
      CHECK(std::abs(m.imag()) < 1e-12);
    }
  }
}

TEST_CASE("scalar walk model is bounded and smooth for dressed phases") {
  std::mt19937_64 rng(77);
  QspSequence seq;
  for (int i = 0; i < 6; ++i) seq.phases.push_back(uniform_sym(rng));
  for (double lam : {-0.99, -0.5, 0.0, 0.25, 0.75, 0.99}) {
    const Complex m = walk_element_model(seq, lam);
    CHECK(std::abs(m) <= 1.0 + 1e-12);
  }
}

TEST_CASE("query count matches a brute-force scan of the objective") {
  for (const auto& [alpha_t, eps] : std::vector<std::pair<double, double>>{
           {1.0, 1e-3}, {10.0, 1e-3}, {40.0, 1e-3}, {40.0, 1e-6}, {200.0, 1e-5}}) {
    const QueryCount qc = query_complexity(alpha_t, eps);
    // scan q on a fine grid as an independent minimizer
    double best = 1e300;
    for (int i = 1; i <= 200000; ++i) {
      const double q = 20.0 * i / 200000.0;
      best = std::min(best, std::exp(q) * alpha_t + std::log(1.0 / eps) / q);
    }
    CHECK(qc.k_star == static_cast<int>(std::ceil(best - 1e-9)));
    CHECK(qc.objective == doctest::Approx(best).epsilon(1e-6));
    CHECK(qc.k_star >= 1);
  }
  CHECK_THROWS_AS(query_complexity(1.0, 2.0), InputError);
  CHECK_THROWS_AS(query_complexity(-1.0, 1e-3), InputError);
}

TEST_CASE("query count grows with evolution phase and shrinks with tolerance") {
  const int k1 = query_complexity(10.0, 1e-3).k_star;
  const int k2 = query_complexity(20.0, 1e-3).k_star;
  const int k3 = query_complexity(10.0, 1e-6).k_star;
  CHECK(k2 > k1);
  CHECK(k3 >= k1);
}

TEST_CASE("assembled protocol books k controlled walks plus k+1 rotations") {
  const LcuPlan plan = heisenberg_benchmark_plan(6, 1);
  QspSequence seq;
  seq.phases = {0.1, -0.2, 0.3, 0.4};  // 3 iterates
  const CircuitIR ir = assemble_qsp_protocol(plan, seq);
  CHECK(ir.metadata.at("iterates") == doctest::Approx(3.0));

  int rotations = 0, cphases = 0;
  for (const auto& layer : ir.layers)
    for (const auto& g : layer.gates) {
      if (g.kind == GateKind::Rotation) ++rotations;
      if (g.kind == GateKind::CPhase) ++cphases;
    }
  CHECK(rotations == 4);
  CHECK(cphases == 3);  // one per controlled walk

  // first layer is the initial z-rotation on the exit atom, dialed to -phi_0
  REQUIRE(ir.layers.front().gates.size() == 1);
  const NativeGate& first = ir.layers.front().gates[0];
  CHECK(first.kind == GateKind::Rotation);
  CHECK(first.axis == 'z');
  CHECK(first.theta == doctest::Approx(-0.1));
  CHECK(ir.registers[static_cast<size_t>(first.atom.reg)].role == RegisterRole::Exit);

  // cost identity: ebgc = k (cw + rot) + initial rotation
  const double cw = account(compile_controlled_walk(plan)).ebgc;
  double rot_cost = 0.0;
  for (double phi : seq.phases) rot_cost += std::abs(phi) / (3 * 3.14159265358979323846);
  CHECK(account(ir).ebgc == doctest::Approx(3 * cw + rot_cost).epsilon(1e-12));
  const double cw_depth = account(compile_controlled_walk(plan)).depth;
  double rot_depth = 0.0;
  for (double phi : seq.phases) rot_depth += std::abs(phi) / 3.14159265358979323846;
  CHECK(account(ir).depth == doctest::Approx(3 * cw_depth + rot_depth).epsilon(1e-12));
}
