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

#include "rqsp/eit.hpp"

#include <cmath>
#include <numbers>

#include "rqsp/util.hpp"

namespace rqsp {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Linear error products are kept linear below this; above it they are passed
// through 1 - exp(-r) so reported probabilities stay in [0, 1].
constexpr double kClampThreshold = 0.1;

double clamp_probability(double rate, bool* clamped) {
  if (rate <= kClampThreshold) return rate;
  if (clamped) *clamped = true;
  return 1.0 - std::exp(-rate);
}

}  // namespace

void EitParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw InputError(std::string(name) + " must be positive and finite");
  };
  positive(gamma_r, "gamma_r");
  positive(gamma_p, "gamma_p");
  positive(omega_p, "omega_p");
  positive(omega_c, "omega_c");
  positive(delta, "delta");
  positive(j_int, "j_int");
}

EitErrorReport conditional_errors(const EitParams& p) {
  p.validate();
  EitErrorReport rep;
  rep.tau_gate = std::numbers::pi * p.delta / (p.omega_p * p.omega_p);
  const double x = std::numbers::sqrt2 * p.omega_p / p.omega_c;

  const double rate_v = rep.tau_gate * p.gamma_r * x * x;
  const double ratio_pd = p.omega_p / p.delta;
  const double ratio_block = p.omega_p * p.omega_c / (p.delta * p.j_int);
  const double rate_s =
      rep.tau_gate * (ratio_pd * ratio_pd * p.gamma_p + p.gamma_r +
                      ratio_block * ratio_block * p.gamma_r);

  bool clamped = false;
  rep.eps_virtual = clamp_probability(rate_v, &clamped);
  rep.eps_saturated = clamp_probability(rate_s, &clamped);
  rep.clamped = clamped;
  rep.eta = rate_v / rate_s;
  rep.bias_linear = p.omega_c < p.j_int * std::sqrt(p.gamma_p / p.gamma_r);
  return rep;
}

double total_error_ohe(const EitParams& p, int n_atoms) {
  if (n_atoms < 1) throw InputError("register must hold at least one atom");
  const EitErrorReport rep = conditional_errors(p);
  // Recompute from unclamped rates so the clamp applies once, to the total.
  const double rate_s = rep.tau_gate * ((p.omega_p / p.delta) * (p.omega_p / p.delta) *
                                            p.gamma_p +
                                        p.gamma_r +
                                        (p.omega_p * p.omega_c / (p.delta * p.j_int)) *
                                            (p.omega_p * p.omega_c / (p.delta * p.j_int)) *
                                            p.gamma_r);
  const double total_rate = rate_s * (1.0 + rep.eta * (n_atoms - 1));
  return clamp_probability(total_rate, nullptr);
}

double eta_strong_drive_asymptotic(const EitParams& p) {
  p.validate();
  const double num = 2.0 * p.delta * p.delta * p.j_int * p.j_int;
  const double den = p.omega_c * p.omega_c * p.omega_c * p.omega_c;
  return num / den;
}

EitParams reported_parameter_example() {
  EitParams p;
  p.gamma_r = 1.0 / 146e-6;
  p.gamma_p = 1.0 / 115e-9;
  p.omega_p = kTwoPi * 12e6;
  p.omega_c = kTwoPi * 120e6;
  p.delta = p.omega_p * std::sqrt(p.gamma_p / p.gamma_r);
  p.j_int = kTwoPi * 500e6;
  return p;
}

EitParams strong_drive_demo_base() {
  EitParams p;
  p.gamma_r = 1.0 / 146e-6;
  p.gamma_p = 1.0 / 115e-9;
  p.omega_p = kTwoPi * 550e6;
  p.omega_c = 10.0 * p.omega_p;
  p.delta = p.omega_p * std::sqrt(p.gamma_p / p.gamma_r);
  p.j_int = p.omega_c / (6.0 * std::sqrt(p.gamma_p / p.gamma_r));
  return p;
}

std::vector<double> strong_drive_total_errors(const EitParams& base,
                                              const std::vector<int>& n_values,
                                              double n_ref) {
  std::vector<double> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 1) throw InputError("register must hold at least one atom");
    EitParams p = base;
    p.omega_c = base.omega_c * std::pow(n / n_ref, 0.25);
    out.push_back(total_error_ohe(p, n));
  }
  return out;
}

}  // namespace rqsp
