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

#include "rqsp/ir.hpp"
#include "rqsp/pauli.hpp"

namespace rqsp {

// Hamiltonian JSON schema:
//   {"n_sites": int, "terms": [{"pauli": "XXI...", "coeff": number}, ...]}
// Pauli string position 0 is site 0. Parse failures throw InputError with
// the offending term index and character position.
Hamiltonian hamiltonian_from_json(const std::string& text);
std::string hamiltonian_to_json(const Hamiltonian& ham);

// Circuit IR round-trip (versioned; unknown versions rejected).
CircuitIR circuit_from_json(const std::string& text);
std::string circuit_to_json(const CircuitIR& ir);

// Resource report as JSON (deterministic key order and number formatting).
std::string report_to_json(const ResourceReport& report);

}  // namespace rqsp
