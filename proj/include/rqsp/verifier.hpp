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

// Dense statevector semantics for compiled circuits, plus the numerical
// checks that tie the compiler's output back to the operator identities it
// claims. All of it is exponential-cost and guarded to at most 14 qubits.
//
// Dense semantics cover the single-level gate set (register rotations,
// controlled register rotations, ground-controlled Paulis, phase stage,
// single-atom rotations). The excitation-fan gates of deeper trees drive a
// third atomic level and have no faithful two-level matrix; plans must have
// one tree level to enter the dense checks.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "rqsp/compiler.hpp"
#include "rqsp/kernels.hpp"
#include "rqsp/qsp.hpp"

namespace rqsp {

// Qubit layout of a compiled circuit: system sites at the low end, then each
// ancilla register in declaration order. Built from the IR's register list.
struct DenseLayout {
  int n_system = 0;
  int total_qubits = 0;
  std::vector<int> reg_offset;  // per IR register index
  std::vector<int> reg_atoms;

  std::int64_t dim() const { return std::int64_t{1} << total_qubits; }
  int qubit_of(const AtomRef& ref) const { return reg_offset[ref.reg] + ref.atom; }
};

DenseLayout make_dense_layout(const CircuitIR& ir);

// Applies one gate / one circuit to a statevector under the layout.
// `dagger` runs the inverse (layers reversed, each gate inverted).
void apply_gate_dense(kernels::State& v, const NativeGate& gate, const DenseLayout& lay,
                      bool dagger = false);
void apply_circuit_dense(kernels::State& v, const CircuitIR& ir, const DenseLayout& lay,
                         bool dagger = false);

// Full matrix of a compiled circuit (column-by-column application).
Eigen::MatrixXcd dense_matrix(const CircuitIR& ir, const DenseLayout& lay);

// The encoded operator A = sum_i w_i sgn_i P_i as a 2^n x 2^n matrix.
Eigen::MatrixXcd encoded_operator(const LcuPlan& plan);

struct CheckResult {
  double max_deviation = 0.0;
  bool pass = false;
  double tolerance = 0.0;
};

// <0,i| V^dag U_paulis V |0,j> must equal A(i,j) up to a global phase.
CheckResult verify_block_encoding(const LcuPlan& plan, double tol = 1e-9);

// The ancilla-vacuum block of the k-th walk power must be T_k(A)
// (Chebyshev). Checks k = 1..k_max.
CheckResult verify_walk_power_blocks(const LcuPlan& plan, int k_max, double tol = 1e-9);

// Restricted to the invariant plane of one eigenvalue lambda = cos(theta), the
// walk's eigenphases are +-theta. Checked per eigenvalue (degenerate planes
// with sin(theta) ~ 0 checked as fixed points instead).
CheckResult verify_walk_eigenphases(const LcuPlan& plan, double tol = 1e-8);

// The compiled [preparation; applied Paulis; reflected preparation] sequence
// must equal (reflection about the ancilla vacuum) x (V^dag U_paulis V) as a
// full-space matrix, up to a global phase.
CheckResult verify_reflection_identity(const LcuPlan& plan, double tol = 1e-9);

// Dense exit-atom matrix element of the assembled protocol at every
// eigenvalue of A versus the scalar two-branch model.
CheckResult verify_qsp_end_to_end(const LcuPlan& plan, const QspSequence& seq,
                                  double tol = 1e-8);

// ||exp(-iHt) - exp(-iH_AB t) exp(+iH_B t) exp(-iH_BC t)|| for the bipartition
// with a middle buffer of l sites (A = left block, B = buffer, C = right
// block; H_X keeps the terms supported inside X). Dense matrices, spectral
// norm. n_sites <= 12 guard.
double lr_decimation_error(const Hamiltonian& ham, double t, int buffer_sites);

// Same, for several buffer sizes; the exact evolution is exponentiated once.
std::vector<double> lr_decimation_errors(const Hamiltonian& ham, double t,
                                         const std::vector<int>& buffer_sizes);

}  // namespace rqsp
