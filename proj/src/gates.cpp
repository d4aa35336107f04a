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

#include "rqsp/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rqsp/util.hpp"

namespace rqsp {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Rotation: return "rotation";
    case GateKind::VOhe: return "vohe";
    case GateKind::CVOhe: return "cvohe";
    case GateKind::CPauli: return "cpauli";
    case GateKind::RPauli: return "rpauli";
    case GateKind::CXR: return "cxr";
    case GateKind::CPhase: return "cphase";
  }
  throw std::logic_error("unreachable gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "rotation") return GateKind::Rotation;
  if (name == "vohe") return GateKind::VOhe;
  if (name == "cvohe") return GateKind::CVOhe;
  if (name == "cpauli") return GateKind::CPauli;
  if (name == "rpauli") return GateKind::RPauli;
  if (name == "cxr") return GateKind::CXR;
  if (name == "cphase") return GateKind::CPhase;
  throw InputError("unknown gate kind: " + name);
}

namespace {
constexpr double kPi = std::numbers::pi;

int charged(const NativeGate& g) {
  return g.charged_targets >= 0 ? g.charged_targets : static_cast<int>(g.targets.size());
}
}  // namespace

double ebgc_of_gate(const NativeGate& g) {
  switch (g.kind) {
    case GateKind::Rotation:
      return std::abs(g.theta) / (3.0 * kPi);
    case GateKind::VOhe:
      return 1.0;
    case GateKind::CVOhe:
      return (g.variant == CVoheVariant::PreparationTree ? 5.0 / 3.0 : 4.0 / 3.0) *
             g.weight;
    case GateKind::CPauli:
      return (2.0 + charged(g)) / 3.0 * g.weight;
    case GateKind::RPauli:
      return charged(g) / 3.0 * g.weight;
    case GateKind::CXR:
      return (2.0 / 3.0) * g.weight * (1.0 + g.amp_sq_sum);
    case GateKind::CPhase:
      return g.cphase_cost;
  }
  throw std::logic_error("unreachable gate kind");
}

double depth_of_gate(const NativeGate& g) {
  switch (g.kind) {
    case GateKind::Rotation: return std::abs(g.theta) / kPi;
    case GateKind::VOhe: return 2.0;
    case GateKind::CVOhe: return 4.0;
    case GateKind::CPauli: return 3.0;
    case GateKind::RPauli: return 1.0;
    case GateKind::CXR: return 4.0;
    case GateKind::CPhase: return 3.0;
  }
  throw std::logic_error("unreachable gate kind");
}

NativeGate make_rotation(AtomRef atom, char axis, double theta) {
  NativeGate g;
  g.kind = GateKind::Rotation;
  g.atom = atom;
  g.axis = axis;
  g.theta = theta;
  return g;
}

NativeGate make_vohe(int reg, std::vector<double> amps, bool tilde) {
  NativeGate g;
  g.kind = GateKind::VOhe;
  g.reg = reg;
  g.amps = std::move(amps);
  g.tilde = tilde;
  return g;
}

NativeGate make_cvohe(int reg, std::vector<double> amps, AtomRef control, double weight,
                      CVoheVariant variant, bool tilde) {
  NativeGate g;
  g.kind = GateKind::CVOhe;
  g.reg = reg;
  g.amps = std::move(amps);
  g.control = control;
  g.weight = weight;
  g.variant = variant;
  g.tilde = tilde;
  return g;
}

NativeGate make_cpauli(AtomRef control, std::vector<int> targets, std::string pauli,
                       double weight) {
  NativeGate g;
  g.kind = GateKind::CPauli;
  g.control = control;
  g.targets = std::move(targets);
  g.pauli = std::move(pauli);
  g.weight = weight;
  return g;
}

NativeGate make_rpauli(AtomRef control, std::vector<int> targets, std::string pauli,
                       double weight) {
  NativeGate g;
  g.kind = GateKind::RPauli;
  g.control = control;
  g.targets = std::move(targets);
  g.pauli = std::move(pauli);
  g.weight = weight;
  return g;
}

NativeGate make_cxr(AtomRef control, int reg, std::vector<int> targets, double amp_sq_sum,
                    double weight) {
  NativeGate g;
  g.kind = GateKind::CXR;
  g.control = control;
  g.reg = reg;
  g.targets = std::move(targets);
  g.amp_sq_sum = amp_sq_sum;
  g.weight = weight;
  return g;
}

NativeGate make_cphase(AtomRef control, double cost) {
  NativeGate g;
  g.kind = GateKind::CPhase;
  g.control = control;
  g.cphase_cost = cost;
  return g;
}

}  // namespace rqsp
