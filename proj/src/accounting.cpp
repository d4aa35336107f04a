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

#include "rqsp/ir.hpp"

namespace rqsp {

ResourceReport account(const CircuitIR& ir) {
  ResourceReport rep;
  for (const auto& layer : ir.layers) {
    rep.depth += layer.depth();
    for (const auto& g : layer.gates) {
      const double cost = ebgc_of_gate(g);
      rep.ebgc += cost;
      rep.ebgc_by_kind[gate_kind_name(g.kind)] += cost;
    }
  }
  for (const auto& reg : ir.registers)
    if (reg.role != RegisterRole::System) rep.ancilla_atoms += reg.atoms;
  return rep;
}

}  // namespace rqsp
