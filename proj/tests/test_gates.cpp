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

#include "doctest.h"
#include "rqsp/gates.hpp"

using namespace rqsp;

namespace {
constexpr double kPi = 3.14159265358979323846;
const AtomRef kCtl{1, 0};
}  // namespace

TEST_CASE("rotation cost scales with angle") {
  CHECK(ebgc_of_gate(make_rotation({0, 0}, 'x', kPi)) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(ebgc_of_gate(make_rotation({0, 0}, 'z', -kPi / 2)) ==
        doctest::Approx(1.0 / 6.0));
  CHECK(ebgc_of_gate(make_rotation({0, 0}, 'y', 0.0)) == 0.0);
  CHECK(depth_of_gate(make_rotation({0, 0}, 'x', kPi)) == doctest::Approx(1.0));
  CHECK(depth_of_gate(make_rotation({0, 0}, 'x', -kPi / 2)) ==
        doctest::Approx(0.5));
}

TEST_CASE("register rotation costs") {
  CHECK(ebgc_of_gate(make_vohe(1, {1.0})) == doctest::Approx(1.0));
  CHECK(ebgc_of_gate(make_vohe(1, {0.6, 0.8}, true)) == doctest::Approx(1.0));
  CHECK(depth_of_gate(make_vohe(1, {1.0})) == doctest::Approx(2.0));

  const auto std_cv =
      make_cvohe(1, {1.0}, kCtl, 0.5, CVoheVariant::Standard);
  CHECK(ebgc_of_gate(std_cv) == doctest::Approx(4.0 / 3.0 * 0.5));
  const auto tree_cv =
      make_cvohe(1, {1.0}, kCtl, 0.5, CVoheVariant::PreparationTree);
  CHECK(ebgc_of_gate(tree_cv) == doctest::Approx(5.0 / 3.0 * 0.5));
  CHECK(depth_of_gate(std_cv) == doctest::Approx(4.0));
  CHECK(depth_of_gate(tree_cv) == doctest::Approx(4.0));
}

TEST_CASE("controlled pauli costs depend on locality and population") {
  const auto two_site = make_cpauli(kCtl, {0, 1}, "XX", 0.25);
  CHECK(ebgc_of_gate(two_site) == doctest::Approx((2.0 + 2.0) / 3.0 * 0.25));
  CHECK(depth_of_gate(two_site) == doctest::Approx(3.0));

  const auto one_site = make_cpauli(kCtl, {4}, "Z", 1.0);
  CHECK(ebgc_of_gate(one_site) == doctest::Approx(1.0));

  auto padded = make_cpauli(kCtl, {4}, "Z", 1.0);
  padded.charged_targets = 2;
  CHECK(ebgc_of_gate(padded) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("excited-control pauli drops the control overhead") {
  const auto r = make_rpauli(kCtl, {0, 1}, "YY", 0.125);
  CHECK(ebgc_of_gate(r) == doctest::Approx(2.0 / 3.0 * 0.125));
  CHECK(depth_of_gate(r) == doctest::Approx(1.0));
  auto padded = make_rpauli(kCtl, {0}, "Z", 0.5);
  padded.charged_targets = 2;
  CHECK(ebgc_of_gate(padded) == doctest::Approx(2.0 / 3.0 * 0.5));
}

TEST_CASE("fan gate cost includes the relocated excitation weight") {
  const auto full = make_cxr(kCtl, 2, {0, 1, 2}, 1.0, 0.5);
  CHECK(ebgc_of_gate(full) == doctest::Approx(2.0 / 3.0 * 0.5 * 2.0));
  CHECK(depth_of_gate(full) == doctest::Approx(4.0));
  // an empty fan branch still relocates the control excitation
  const auto empty = make_cxr(kCtl, 2, {0, 1, 2}, 0.0, 0.5);
  CHECK(ebgc_of_gate(empty) == doctest::Approx(2.0 / 3.0 * 0.5));
}

TEST_CASE("conditional phase cost is configured, not population-scaled") {
  const auto cp = make_cphase(kCtl);
  CHECK(ebgc_of_gate(cp) == doctest::Approx(4.0 / 3.0));
  CHECK(depth_of_gate(cp) == doctest::Approx(3.0));
  const auto cheap = make_cphase(kCtl, 1.0);
  CHECK(ebgc_of_gate(cheap) == doctest::Approx(1.0));
}

TEST_CASE("gate kind names round-trip") {
  for (GateKind k : {GateKind::Rotation, GateKind::VOhe, GateKind::CVOhe,
                     GateKind::CPauli, GateKind::RPauli, GateKind::CXR,
                     GateKind::CPhase}) {
    CHECK(gate_kind_from_name(gate_kind_name(k)) == k);
  }
  CHECK_THROWS(gate_kind_from_name("no-such-gate"));
}
