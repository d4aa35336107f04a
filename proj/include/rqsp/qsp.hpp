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

#include <array>
#include <complex>
#include <vector>

#include "rqsp/compiler.hpp"
#include "rqsp/ir.hpp"

namespace rqsp {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2

// Phase sequence of a single-variable signal-processing protocol:
// phases[0] is the initial z-phase, phases[1..n] dress the n iterates.
struct QspSequence {
  std::vector<double> phases;

  int iterates() const { return static_cast<int>(phases.size()) - 1; }
};

// The 2x2 iterate at signal value x in [-1, 1]: the rotation
//   [[x, -s], [s, x]],  s = sqrt(1 - x^2),
// whose n-fold power has Chebyshev entries T_n(x).
Mat2 qsp_iterate(double x);

// Full dressed product G(phi_n) R(x) ... G(phi_1) R(x) G(phi_0) with
// G(phi) = diag(e^{i phi}, e^{-i phi}). The implemented polynomial is the
// (0,0) entry.
Mat2 qsp_product(const QspSequence& seq, double x);

// Implemented polynomial P(x) = top-left entry of qsp_product.
Complex qsp_evaluate(const QspSequence& seq, double x);

// Largest deviation of qsp_product from unitarity (max over the sample
// points of ||M M^dag - I||_max). All-zero phases give exactly 0.
double qsp_constraint_check(const QspSequence& seq, const std::vector<double>& xs);

// Scalar model of the compiled protocol's exit-atom matrix element at
// Hamiltonian eigenvalue lambda: the walk restricted to one eigenpair is a
// pair of phase branches e^{+-i theta}, theta = arccos(lambda); the element is
// averaged over the two branches:
//   M(lambda) = (1/2) sum_eta <1| X_{phi_n} D_eta ... X_{phi_1} D_eta Z_{phi_0} |1>,
//   X_phi = e^{i phi sigma_x},  Z_phi = e^{i phi sigma_z},
//   D_eta = diag(1, e^{i eta theta}).
// The dense verifier must reproduce this element per eigenvalue.
Complex walk_element_model(const QspSequence& seq, double lambda);

// Number of walk queries needed for evolution phase alpha_t at target error
// eps: k* = ceil(min_q [ e^q alpha_t + ln(1/eps) / q ]), the minimum located
// by golden-section search on q in [1e-6, 20].
struct QueryCount {
  int k_star = 0;
  double q_opt = 0.0;
  double objective = 0.0;
};
QueryCount query_complexity(double alpha_t, double eps);

// Assembles the transduction protocol: initial z-rotation on the exit atom,
// then per iterate one controlled walk followed by an x-rotation on the exit
// atom. Registers: system, address registers, exit.
CircuitIR assemble_qsp_protocol(const LcuPlan& plan, const QspSequence& seq);

}  // namespace rqsp
