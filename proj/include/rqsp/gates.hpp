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

// Native gate set of the compiler. Costs are error-bounded gate counts
// (EBGC): each gate's contribution is proportional to the population of the
// states that actually drive it, normalized so that a CNOT-class operation
// at unit population costs 1. The `weight` field carries that population
// (the saturation probability of the gate's control branch).
enum class GateKind {
  Rotation,    // single-atom rotation by theta about x, y or z
  VOhe,        // one-hot-encoding register rotation (tilde flag: reflection-conjugated)
  CVOhe,       // controlled register rotation
  CPauli,      // multi-target Pauli controlled on one ground-manifold atom
  RPauli,      // multi-target Pauli driven by an already-excited control atom
  CXR,         // excitation-fan gate: copies a control excitation onto a register
  CPhase,      // conditional pi phase on the walk's phase atom
};

const char* gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// Variant of CVOhe. PreparationTree is the flavor used inside coefficient
// state preparation, where the control excitation is also relocated; it
// carries a 5/3 population coefficient instead of the plain 4/3.
enum class CVoheVariant { Standard, PreparationTree };

struct AtomRef {
  int reg = -1;   // index into CircuitIR::registers; -1 means "none"
  int atom = -1;  // atom index inside that register

  bool valid() const { return reg >= 0 && atom >= 0; }
};

struct NativeGate {
  GateKind kind = GateKind::Rotation;

  // Rotation
  char axis = 'z';
  double theta = 0.0;

  // Register-level gates (VOhe, CVOhe): which register, its target
  // amplitudes, and whether this is the reflection-conjugated flavor used on
  // the uncompute side of a walk step.
  int reg = -1;
  std::vector<double> amps;
  bool tilde = false;
  CVoheVariant variant = CVoheVariant::Standard;

  // Control atom for CVOhe / CPauli / RPauli / CXR / CPhase (when present).
  AtomRef control;

  // CPauli / RPauli: target system sites and the Pauli acting there.
  // CXR: target register atoms (fan destinations).
  std::vector<int> targets;
  std::string pauli;

  // Sign of the applied Pauli (+1/-1); negative Hamiltonian coefficients fold
  // into the drive phase. No cost impact.
  double sign = 1.0;

  // Cost-side locality ceiling: when >= 0 the EBGC charges this many targets
  // instead of targets.size(). Used when a plan accounts all terms at a fixed
  // locality (padding lighter terms up to it).
  int charged_targets = -1;

  // CXR: sum of squared amplitudes over the fan destinations.
  double amp_sq_sum = 1.0;

  // CPhase: configured cost constant.
  double cphase_cost = 4.0 / 3.0;

  // Population of the control branch (saturation probability). 1.0 for
  // unconditional gates and unit-population controls.
  double weight = 1.0;

  // Coefficient-tree path that produced this gate, for diagnostics.
  std::vector<int> path;

  // Single-atom placement for Rotation gates.
  AtomRef atom;
};

// Error-bounded gate count of a single gate, per the native cost table:
//   Rotation(theta)            |theta| / (3 pi)
//   VOhe (either flavor)       1
//   CVOhe                      (4/3) p   (PreparationTree variant: (5/3) p)
//   CPauli, k targets          ((2+k)/3) p
//   RPauli, k targets          (k/3) p
//   CXR, fan weight s2         (2/3) p (1 + s2)
//   CPhase                     configured constant (default 4/3)
// where p is gate.weight and k honors charged_targets.
double ebgc_of_gate(const NativeGate& gate);

// Native duration of a single gate in pi-pulse units:
//   Rotation |theta|/pi; VOhe 2; CVOhe 4; CPauli 3; RPauli 1; CXR 4; CPhase 3.
double depth_of_gate(const NativeGate& gate);

// --- construction helpers ---
NativeGate make_rotation(AtomRef atom, char axis, double theta);
NativeGate make_vohe(int reg, std::vector<double> amps, bool tilde = false);
NativeGate make_cvohe(int reg, std::vector<double> amps, AtomRef control, double weight,
                      CVoheVariant variant, bool tilde = false);
NativeGate make_cpauli(AtomRef control, std::vector<int> targets, std::string pauli,
                       double weight);
NativeGate make_rpauli(AtomRef control, std::vector<int> targets, std::string pauli,
                       double weight);
NativeGate make_cxr(AtomRef control, int reg, std::vector<int> targets, double amp_sq_sum,
                    double weight);
NativeGate make_cphase(AtomRef control, double cost = 4.0 / 3.0);

}  // namespace rqsp
