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

#pragma once

#include <string>
#include <vector>

namespace rqsp {

// Physical-layer error model for dark-state (transparency-window) conditional
// gates. Angular frequencies in rad/s, decay rates in 1/s (gamma = 1/tau).
struct EitParams {
  double gamma_r = 0.0;   // Rydberg-level decay rate
  double gamma_p = 0.0;   // intermediate (P) level decay rate
  double omega_p = 0.0;   // probe Rabi frequency
  double omega_c = 0.0;   // coupling (control) Rabi frequency
  double delta = 0.0;     // single-photon detuning
  double j_int = 0.0;     // control-target interaction strength

  void validate() const;  // positivity checks, throws InputError
};

struct EitErrorReport {
  double tau_gate = 0.0;        // pi-pulse gate duration pi*delta/omega_p^2
  double eps_virtual = 0.0;     // off-resonant (unsaturated) branch error
  double eps_saturated = 0.0;   // saturated-branch error
  double eta = 0.0;             // eps_virtual / eps_saturated (linear rates)
  bool bias_linear = false;     // omega_c below the bias-preserving ceiling
  bool clamped = false;         // any probability passed the linear regime
};

// Per-gate conditional error rates:
//   tau_g  = pi * delta / omega_p^2
//   x      = sqrt(2) * omega_p / omega_c
//   eps_v  = tau_g * gamma_r * x^2
//   eps_s  = tau_g * [ (omega_p/delta)^2 gamma_p + gamma_r
//                      + (omega_p omega_c / (delta j))^2 gamma_r ]
// Probabilities are clamped through 1 - exp(-rate) once the linear product
// exceeds 0.1 (the linear form is kept below that). eta uses the unclamped
// rate ratio. bias_linear tests omega_c < j * sqrt(gamma_p / gamma_r).
EitErrorReport conditional_errors(const EitParams& p);

// Total error of one conditional gate addressing a register of N atoms:
// one saturated branch plus N-1 off-resonant spectators,
//   eps_tot = eps_s * (1 + eta * (N - 1)),
// clamped like the per-gate rates.
double total_error_ohe(const EitParams& p, int n_atoms);

// Large-N strong-driving limit of the spectator ratio:
//   eta -> 2 delta^2 j^2 / omega_c^4.
double eta_strong_drive_asymptotic(const EitParams& p);

// Published operating point used for workflow checks: tau_r = 146 us
// Rydberg lifetime, tau_p = 115 ns intermediate lifetime, probe at
// 2 pi * 12 MHz with delta / omega_p = sqrt(gamma_p / gamma_r), coupling at
// 2 pi * 120 MHz, interaction 2 pi * 500 MHz.
EitParams reported_parameter_example();

// Demonstration preset for the strong-driving scaling study: same lifetimes,
// probe at 2 pi * 550 MHz, base coupling 10x the probe, interaction fixed by
// j = omega_c0 / (6 * delta/omega_p ratio).
EitParams strong_drive_demo_base();

// Scaling study: registers of size N with the coupling strengthened as
// omega_c(N) = omega_c0 * (N / n_ref)^(1/4); returns the total error for
// each N. The log-log slope of the result approaches 1/2.
std::vector<double> strong_drive_total_errors(const EitParams& base,
                                              const std::vector<int>& n_values,
                                              double n_ref = 100.0);

}  // namespace rqsp
