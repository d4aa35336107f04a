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

#include <cstdint>
#include <optional>
#include <vector>

#include "rqsp/ir.hpp"
#include "rqsp/pauli.hpp"
#include "rqsp/tree.hpp"

namespace rqsp {

// A Hamiltonian lowered to unitary-combination form: A = sum_i w_i P_i with
// w_i = |c_i| / sum|c|, the sign of each coefficient folded into its Pauli's
// phase convention (negative coefficients flip the applied Pauli's sign).
// The weights live in a coefficient tree whose shape fixes the address
// register sizes of every compiled circuit.
struct LcuPlan {
  Hamiltonian ham;
  double one_norm = 0.0;
  std::vector<int> branching;
  CoefficientTree tree;
  // term_for_leaf[leaf] is the Hamiltonian term packed at that leaf, or -1
  // for padding.
  std::vector<std::int64_t> term_for_leaf;
  // When >= 0, every applied-Pauli gate is charged as acting on this many
  // sites, regardless of actual support (fixed-locality accounting).
  int support_ceiling = -1;

  int levels() const { return static_cast<int>(branching.size()); }
};

// Packs a Hamiltonian into a plan. Terms are ordered by descending weight
// (ties broken by original index) before packing, so heavy terms occupy the
// low addresses. Throws InputError when the tree has fewer leaves than terms
// or a branching entry is < 1.
LcuPlan make_lcu_plan(const Hamiltonian& ham, std::vector<int> branching,
                      int support_ceiling = -1);

// The standing benchmark instance: disordered Heisenberg chain on n sites,
// two-level tree with 7 row atoms and n column atoms. The 4n - 3 terms pack
// heavy-first into the low rows; later rows stay empty but keep their
// schedule slots. All terms are charged at locality 2.
LcuPlan heisenberg_benchmark_plan(int n_sites, std::uint64_t seed);

// --- circuit builders ---
// Registers are laid out identically across all builders for one plan:
// index 0 the system, then one Address register per tree level, then (for
// the controlled builders) the Exit register.

// Coefficient state preparation V: root rotation on the first address
// register, then one tree-variant controlled rotation per internal node,
// one per layer. Rows with zero mass still occupy their schedule slot.
CircuitIR compile_state_prep(const LcuPlan& plan);

// Reflection-conjugated preparation (the uncompute stage of a walk step):
// the same schedule reversed, every gate in its tilde flavor.
CircuitIR compile_state_prep_tilde(const LcuPlan& plan);

// Address-controlled Pauli application. One level: a 3-slot schedule per
// populated address (controlled Pauli). Two levels: per row, an excitation
// fan onto the column register, one parallel slot of excited-control Paulis,
// and the fan uncompute (9 slots per row). Deeper trees recurse the fan
// pattern. Padding leaves and identity terms emit no drive.
CircuitIR compile_applied_paulis(const LcuPlan& plan);

// Full walk step W = -(reflected preparation) o (applied Paulis) o
// (preparation), closed by the phase stage. The phase stage of the
// uncontrolled walk is a global sign (no extra atom); its booked duration
// rides on the adjacent stage (declared depth 1).
CircuitIR compile_walk(const LcuPlan& plan);

// Walk conditioned on the exit atom: both outer preparation rotations become
// exit-controlled tree-variant rotations, the phase stage becomes an
// exit-conditioned flip with its full 4-slot booking.
CircuitIR compile_controlled_walk(const LcuPlan& plan);

}  // namespace rqsp
