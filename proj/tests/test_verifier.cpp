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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "rqsp/dense_linalg.hpp"
#include "rqsp/verifier.hpp"

using namespace rqsp;
using Eigen::MatrixXcd;
using Cd = std::complex<double>;

namespace {

MatrixXcd random_antihermitian(int n, double scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Cd(dist(rng), dist(rng));
  MatrixXcd h = (a + a.adjoint()) / 2.0;
  return Cd(0, 1) * h * scale;
}

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Hamiltonian two_site_chain(std::uint64_t seed = 1) {
  return disordered_heisenberg_chain(2, seed);
}

LcuPlan flat_plan(const Hamiltonian& ham) {
  return make_lcu_plan(ham, {static_cast<int>(ham.terms.size())});
}

}  // namespace

TEST_CASE("matrix exponential reproduces closed forms") {
  CHECK(max_abs(expm(MatrixXcd::Zero(3, 3)) - MatrixXcd::Identity(3, 3)) < 1e-14);

  MatrixXcd d = MatrixXcd::Zero(2, 2);
  d(0, 0) = Cd(0.3, 0);
  d(1, 1) = Cd(-1.2, 0.4);
  const MatrixXcd ed = expm(d);
  CHECK(std::abs(ed(0, 0) - std::exp(Cd(0.3, 0))) < 1e-13);
  CHECK(std::abs(ed(1, 1) - std::exp(Cd(-1.2, 0.4))) < 1e-13);
  CHECK(std::abs(ed(0, 1)) < 1e-14);

  MatrixXcd nilpotent = MatrixXcd::Zero(2, 2);
  nilpotent(0, 1) = Cd(1, 0);
  const MatrixXcd en = expm(nilpotent);
  CHECK(std::abs(en(0, 0) - Cd(1, 0)) < 1e-14);
  CHECK(std::abs(en(0, 1) - Cd(1, 0)) < 1e-14);
  CHECK(std::abs(en(1, 0)) < 1e-14);

  // exp(-i theta sigma_y) is the real rotation matrix
  const double th = 0.8;
  MatrixXcd sy = MatrixXcd::Zero(2, 2);
  sy(0, 1) = Cd(0, -1);
  sy(1, 0) = Cd(0, 1);
  const MatrixXcd ry = expm(Cd(0, -th) * sy);
  CHECK(std::abs(ry(0, 0) - Cd(std::cos(th), 0)) < 1e-13);
  CHECK(std::abs(ry(0, 1) - Cd(-std::sin(th), 0)) < 1e-13);
  CHECK(std::abs(ry(1, 0) - Cd(std::sin(th), 0)) < 1e-13);
}

TEST_CASE("matrix exponential of antihermitian input is unitary") {
  for (double scale : {0.1, 1.0, 4.0, 20.0}) {  // spans the ladder and squaring
    const MatrixXcd a = random_antihermitian(24, scale, 7);
    const MatrixXcd u = expm(a);
    CHECK(max_abs(u * u.adjoint() - MatrixXcd::Identity(24, 24)) < 1e-11);
    CHECK(max_abs(u * expm(MatrixXcd(-a)) - MatrixXcd::Identity(24, 24)) < 1e-11);
    // halving identity: exp(A) = exp(A/2)^2
    const MatrixXcd half = expm(MatrixXcd(a / 2.0));
    CHECK(max_abs(u - half * half) < 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("spectral norm agrees with a full SVD") {
  MatrixXcd d = MatrixXcd::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -5.0;
  d(2, 2) = 2.0;
  CHECK(spectral_norm(d) == doctest::Approx(5.0).epsilon(1e-9));

  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist;
  MatrixXcd a(20, 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) a(i, j) = Cd(dist(rng), dist(rng));
  const double svd_norm = a.jacobiSvd().singularValues()(0);
  CHECK(spectral_norm(a) == doctest::Approx(svd_norm).epsilon(1e-8));
}

TEST_CASE("kron puts the left factor on the high bits") {
  MatrixXcd d = MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  const MatrixXcd k = kron(d, MatrixXcd::Identity(2, 2));
  CHECK(std::abs(k(0, 0) - Cd(1, 0)) < 1e-15);
  CHECK(std::abs(k(1, 1) - Cd(1, 0)) < 1e-15);
  CHECK(std::abs(k(2, 2) - Cd(2, 0)) < 1e-15);
  CHECK(std::abs(k(3, 3) - Cd(2, 0)) < 1e-15);

  MatrixXcd a(2, 2), b(2, 2);
  a << Cd(1, 1), Cd(0, 2), Cd(3, 0), Cd(-1, 0);
  b << Cd(0, 1), Cd(2, 0), Cd(1, 0), Cd(0, -1);
  const MatrixXcd ab = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          CHECK(std::abs(ab(2 * i + r, 2 * j + c) - a(i, j) * b(r, c)) < 1e-15);
}

TEST_CASE("encoded operator is the normalized Pauli sum") {
  Hamiltonian ham;
  ham.n_sites = 2;
  ham.terms = {{"XI", 1.0}, {"ZZ", -3.0}};
  const LcuPlan plan = flat_plan(ham);
  const MatrixXcd a = encoded_operator(plan);
  REQUIRE(a.rows() == 4);
  // (1/4) X on site 0 - (3/4) ZZ, site 0 = low bit
  MatrixXcd expected = MatrixXcd::Zero(4, 4);
  expected(0, 1) = expected(1, 0) = Cd(0.25, 0);
  expected(2, 3) = expected(3, 2) = Cd(0.25, 0);
  expected(0, 0) = expected(3, 3) = Cd(-0.75, 0);
  expected(1, 1) = expected(2, 2) = Cd(0.75, 0);
  CHECK(max_abs(a - expected) < 1e-14);
  CHECK(max_abs(a - a.adjoint()) < 1e-14);
  CHECK(spectral_norm(a) <= 1.0 + 1e-12);
}

TEST_CASE("dense preparation drives the weighted one-hot state") {
  const Hamiltonian ham = two_site_chain();
  const LcuPlan plan = flat_plan(ham);
  const CircuitIR prep = compile_state_prep(plan);
  const DenseLayout lay = make_dense_layout(prep);
  CHECK(lay.n_system == 2);
  CHECK(lay.total_qubits == 2 + 5);

  kernels::State v(static_cast<size_t>(lay.dim()), Cd(0, 0));
  v[0] = Cd(1, 0);
  apply_circuit_dense(v, prep, lay);
  for (int l = 0; l < 5; ++l) {
    const double w = plan.tree.leaf_prob(l);
    const size_t idx = size_t{1} << (2 + l);
    CHECK(std::abs(v[idx] - Cd(std::sqrt(w), 0)) < 1e-12);
  }
  CHECK(std::abs(v[0]) < 1e-12);

  // dagger inverts
  apply_circuit_dense(v, prep, lay, true);
  CHECK(std::abs(v[0] - Cd(1, 0)) < 1e-12);
  double rest = 0.0;
  for (size_t i = 1; i < v.size(); ++i) rest += std::norm(v[i]);
  CHECK(rest < 1e-20);
}

TEST_CASE("dense circuits are unitary") {
  const LcuPlan plan = flat_plan(two_site_chain());
  const CircuitIR walk = compile_walk(plan);
  const DenseLayout lay = make_dense_layout(walk);
  const MatrixXcd w = dense_matrix(walk, lay);
  CHECK(max_abs(w * w.adjoint() - MatrixXcd::Identity(w.rows(), w.cols())) < 1e-11);
}

TEST_CASE("two-level plans are rejected by the dense verifier") {
  const Hamiltonian ham = disordered_heisenberg_chain(2, 1);
  const LcuPlan two_level = make_lcu_plan(ham, {3, 2});
  CHECK_THROWS(verify_block_encoding(two_level));
}

TEST_CASE("block encoding: the walk's vacuum block is the Hamiltonian") {
  for (std::uint64_t seed : {1ull, 2ull}) {
    const LcuPlan plan = flat_plan(two_site_chain(seed));
    const CheckResult r = verify_block_encoding(plan);
    CHECK(r.pass);
    CHECK(r.max_deviation < 1e-10);
  }
  // a slightly larger instance: 3 sites, 9 terms, 12 qubits
  const LcuPlan big = flat_plan(disordered_heisenberg_chain(3, 1));
  const CheckResult r = verify_block_encoding(big);
  CHECK(r.pass);
}

TEST_CASE("walk powers project to Chebyshev polynomials of the Hamiltonian") {
  const LcuPlan plan = flat_plan(two_site_chain());
  const CheckResult r = verify_walk_power_blocks(plan, 3);
  CHECK(r.pass);
  CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("walk eigenphases land on the arccos of the spectrum") {
  const LcuPlan plan = flat_plan(two_site_chain());
  const CheckResult r = verify_walk_eigenphases(plan);
  CHECK(r.pass);
}

TEST_CASE("uncompute stage equals the reflected preparation inverse") {
  const LcuPlan plan = flat_plan(two_site_chain());
  const CheckResult r = verify_reflection_identity(plan);
  CHECK(r.pass);
  CHECK(r.max_deviation < 1e-10);
}

TEST_CASE("compiled protocol matches the scalar exit model per eigenvalue") {
  const LcuPlan plan = flat_plan(two_site_chain());
  SUBCASE("bare Chebyshev phases") {
    QspSequence seq;
    seq.phases.assign(5, 0.0);
    const CheckResult r = verify_qsp_end_to_end(plan, seq);
    CHECK(r.pass);
  }
  SUBCASE("dressed phases") {
    QspSequence seq;
    seq.phases = {0.3, -0.7, 0.2, 0.5};
    const CheckResult r = verify_qsp_end_to_end(plan, seq);
    CHECK(r.pass);
    CHECK(r.max_deviation < 1e-8);
  }
}

TEST_CASE("decimated evolution error shrinks with buffer size and time") {
  const Hamiltonian ham = disordered_heisenberg_chain(6, 1);
  const auto errors = lr_decimation_errors(ham, 0.2, {2, 4});
  REQUIRE(errors.size() == 2);
  CHECK(errors[0] > 0.0);
  CHECK(errors[1] <= errors[0]);

  const double late = lr_decimation_error(ham, 0.4, 2);
  CHECK(late >= errors[0]);

  // all decimation errors are bounded by 2 (difference of unitaries)
  for (double e : errors) CHECK(e <= 2.0);
}

TEST_CASE("decimation guards its domain") {
  const Hamiltonian ham = disordered_heisenberg_chain(6, 1);
  CHECK_THROWS(lr_decimation_error(ham, 0.2, 6));  // no buffer left
  CHECK_THROWS(lr_decimation_error(disordered_heisenberg_chain(14, 1), 0.1, 4));
}
