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
#include <vector>

#include "doctest.h"
#include "rqsp/eit.hpp"
#include "rqsp/util.hpp"

using namespace rqsp;

TEST_CASE("reported operating point reproduces the workflow numbers") {
  const EitParams p = reported_parameter_example();
  const EitErrorReport r = conditional_errors(p);

  // gate time pi * delta / omega_p^2 = 1.485 us
  CHECK(r.tau_gate == doctest::Approx(1.4846e-6).epsilon(1e-3));

  // detuning balances intermediate and Rydberg decay, so the saturated error
  // is ~2 tau_g gamma_r plus a small interaction leak
  CHECK(r.eps_saturated == doctest::Approx(0.020337).epsilon(1e-3));
  CHECK(r.eps_saturated >= 0.016);
  CHECK(r.eps_saturated <= 0.025);

  // spectators sit at (omega_p/omega_c)^2 of the saturated branch: 1/100
  CHECK(r.eps_virtual == doctest::Approx(r.eps_saturated * 0.01).epsilon(5e-3));
  CHECK(r.eta == doctest::Approx(0.01).epsilon(1e-2));

  CHECK(r.bias_linear);
  CHECK_FALSE(r.clamped);
}

TEST_CASE("hundred-atom register stays under the 5 percent budget") {
  const EitParams p = reported_parameter_example();
  const double total = total_error_ohe(p, 100);
  CHECK(total == doctest::Approx(0.040471).epsilon(1e-3));
  CHECK(total < 0.05);
  // the linear composition: eps_s * (1 + eta * 99)
  const EitErrorReport r = conditional_errors(p);
  CHECK(total ==
        doctest::Approx(r.eps_saturated * (1 + r.eta * 99)).epsilon(1e-12));
}

TEST_CASE("probabilities clamp through 1 - exp once past the linear regime") {
  const EitParams p = reported_parameter_example();
  // ~10^4 spectators push the linear total over 1; the clamp keeps it a
  // probability
  const double total = total_error_ohe(p, 10000);
  const EitErrorReport r = conditional_errors(p);
  const double linear = r.eps_saturated * (1 + r.eta * 9999);
  CHECK(linear > 1.0);
  CHECK(total == doctest::Approx(1.0 - std::exp(-linear)).epsilon(1e-12));
  CHECK(total < 1.0);
  CHECK(total > 0.8);
}

TEST_CASE("small rates pass through the clamp untouched") {
  const EitParams p = reported_parameter_example();
  const EitErrorReport r = conditional_errors(p);
  // eps_s = 0.0203 is below the 0.1 linear ceiling
  CHECK_FALSE(r.clamped);
  CHECK(total_error_ohe(p, 1) == doctest::Approx(r.eps_saturated));
}

TEST_CASE("bias-preservation ceiling on the coupling drive") {
  EitParams p = reported_parameter_example();
  CHECK(conditional_errors(p).bias_linear);
  p.omega_c = p.j_int * std::sqrt(p.gamma_p / p.gamma_r) * 1.5;
  CHECK_FALSE(conditional_errors(p).bias_linear);
}

TEST_CASE("strong-drive spectator ratio falls as the inverse fourth power") {
  EitParams p = strong_drive_demo_base();
  const double eta0 = eta_strong_drive_asymptotic(p);
  CHECK(eta0 == doctest::Approx(2.0 * p.delta * p.delta * p.j_int * p.j_int /
                                std::pow(p.omega_c, 4)));
  EitParams doubled = p;
  doubled.omega_c *= 2.0;
  CHECK(eta_strong_drive_asymptotic(doubled) == doctest::Approx(eta0 / 16.0));
  EitParams quadrupled = p;
  quadrupled.omega_c *= 4.0;
  CHECK(eta_strong_drive_asymptotic(quadrupled) ==
        doctest::Approx(eta0 / 256.0));
}

TEST_CASE("quarter-power coupling growth yields a square-root error slope") {
  const EitParams base = strong_drive_demo_base();
  const std::vector<int> ns{100, 200, 400, 800, 1600, 3200};
  const auto totals = strong_drive_total_errors(base, ns);
  REQUIRE(totals.size() == ns.size());
  for (double e : totals) {
    CHECK(e > 0.0);
    CHECK(e < 0.1);  // still linear over this range
  }
  std::vector<double> log_n, log_e;
  for (size_t i = 0; i < ns.size(); ++i) {
    log_n.push_back(std::log(static_cast<double>(ns[i])));
    log_e.push_back(std::log(totals[i]));
  }
  const auto fit = fit_line(log_n, log_e);
  CHECK(fit.slope > 0.46);
  CHECK(fit.slope < 0.50);
}

TEST_CASE("parameter validation") {
  EitParams p = reported_parameter_example();
  p.omega_c = 0.0;
  CHECK_THROWS_AS(conditional_errors(p), InputError);
  p = reported_parameter_example();
  p.gamma_r = -1.0;
  CHECK_THROWS_AS(conditional_errors(p), InputError);
  CHECK_THROWS_AS(total_error_ohe(reported_parameter_example(), 0), InputError);
}
