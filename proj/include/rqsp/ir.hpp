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

#include <map>
#include <string>
#include <vector>

#include "rqsp/gates.hpp"

namespace rqsp {

enum class RegisterRole { System, Address, Phase, Exit };

const char* register_role_name(RegisterRole role);
RegisterRole register_role_from_name(const std::string& name);

struct Register {
  std::string name;
  int atoms = 0;
  RegisterRole role = RegisterRole::Address;
};

// One parallel layer. Depth contribution is the maximum member duration
// unless `declared_depth` >= 0, which overrides it (used where a stage's
// booked duration differs from the table value of its single gate, e.g. the
// walk's phase flip riding on an adjacent stage).
struct Layer {
  std::vector<NativeGate> gates;
  double declared_depth = -1.0;

  double depth() const;
};

struct CircuitIR {
  int version = 1;
  std::vector<Register> registers;
  std::vector<Layer> layers;
  std::map<std::string, double> metadata;

  int register_index(const std::string& name) const;  // -1 if absent
  void append(const CircuitIR& other);                // layers only; registers must match
};

struct ResourceReport {
  double ebgc = 0.0;
  double depth = 0.0;
  int ancilla_atoms = 0;
  std::map<std::string, double> ebgc_by_kind;
};

// Sums gate costs and layer depths over the circuit. Ancilla atoms are the
// declared non-System register sizes.
ResourceReport account(const CircuitIR& ir);

}  // namespace rqsp
