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

#include <algorithm>
#include <stdexcept>

#include "rqsp/util.hpp"

namespace rqsp {

const char* register_role_name(RegisterRole role) {
  switch (role) {
    case RegisterRole::System: return "system";
    case RegisterRole::Address: return "address";
    case RegisterRole::Phase: return "phase";
    case RegisterRole::Exit: return "exit";
  }
  throw std::logic_error("unreachable register role");
}

RegisterRole register_role_from_name(const std::string& name) {
  if (name == "system") return RegisterRole::System;
  if (name == "address") return RegisterRole::Address;
  if (name == "phase") return RegisterRole::Phase;
  if (name == "exit") return RegisterRole::Exit;
  throw InputError("unknown register role: " + name);
}

double Layer::depth() const {
  if (declared_depth >= 0.0) return declared_depth;
  double d = 0.0;
  for (const auto& g : gates) d = std::max(d, depth_of_gate(g));
  return d;
}

int CircuitIR::register_index(const std::string& name) const {
  for (size_t i = 0; i < registers.size(); ++i)
    if (registers[i].name == name) return static_cast<int>(i);
  return -1;
}

void CircuitIR::append(const CircuitIR& other) {
  if (other.registers.size() != registers.size())
    throw std::logic_error("append: register layout mismatch");
  for (size_t i = 0; i < registers.size(); ++i)
    if (registers[i].name != other.registers[i].name ||
        registers[i].atoms != other.registers[i].atoms)
      throw std::logic_error("append: register layout mismatch at " + registers[i].name);
  layers.insert(layers.end(), other.layers.begin(), other.layers.end());
}

}  // namespace rqsp
