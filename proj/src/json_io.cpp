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

#include "rqsp/json_io.hpp"

#include <nlohmann/json.hpp>

#include "rqsp/util.hpp"

namespace rqsp {
namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

Json atom_to_json(const AtomRef& a) { return Json::array({a.reg, a.atom}); }

AtomRef atom_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("atom reference must be [reg, atom]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json gate_to_json(const NativeGate& g) {
  Json j;
  j["kind"] = gate_kind_name(g.kind);
  switch (g.kind) {
    case GateKind::Rotation:
      j["atom"] = atom_to_json(g.atom);
      j["axis"] = std::string(1, g.axis);
      j["theta"] = g.theta;
      break;
    case GateKind::VOhe:
    case GateKind::CVOhe:
      j["reg"] = g.reg;
      j["amps"] = g.amps;
      j["tilde"] = g.tilde;
      if (g.kind == GateKind::CVOhe) {
        j["control"] = atom_to_json(g.control);
        j["weight"] = g.weight;
        j["variant"] =
            g.variant == CVoheVariant::PreparationTree ? "prep_tree" : "standard";
      }
      break;
    case GateKind::CPauli:
    case GateKind::RPauli:
      j["control"] = atom_to_json(g.control);
      j["targets"] = g.targets;
      j["pauli"] = g.pauli;
      j["sign"] = g.sign;
      j["weight"] = g.weight;
      if (g.charged_targets >= 0) j["charged_targets"] = g.charged_targets;
      break;
    case GateKind::CXR:
      j["control"] = atom_to_json(g.control);
      j["reg"] = g.reg;
      j["targets"] = g.targets;
      j["amp_sq_sum"] = g.amp_sq_sum;
      j["weight"] = g.weight;
      break;
    case GateKind::CPhase:
      if (g.control.valid()) j["control"] = atom_to_json(g.control);
      j["cost"] = g.cphase_cost;
      break;
  }
  if (!g.path.empty()) j["path"] = g.path;
  return j;
}

NativeGate gate_from_json(const Json& j) {
  if (!j.contains("kind")) throw InputError("gate without kind");
  NativeGate g;
  g.kind = gate_kind_from_name(j["kind"].get<std::string>());
  switch (g.kind) {
    case GateKind::Rotation: {
      g.atom = atom_from_json(j.at("atom"));
      const auto axis = j.at("axis").get<std::string>();
      if (axis.size() != 1) throw InputError("rotation axis must be one character");
      g.axis = axis[0];
      g.theta = j.at("theta").get<double>();
      break;
    }
    case GateKind::VOhe:
    case GateKind::CVOhe:
      g.reg = j.at("reg").get<int>();
      g.amps = j.at("amps").get<std::vector<double>>();
      g.tilde = j.value("tilde", false);
      if (g.kind == GateKind::CVOhe) {
        g.control = atom_from_json(j.at("control"));
        g.weight = j.at("weight").get<double>();
        const auto variant = j.value("variant", std::string("standard"));
        if (variant == "prep_tree")
          g.variant = CVoheVariant::PreparationTree;
        else if (variant == "standard")
          g.variant = CVoheVariant::Standard;
        else
          throw InputError("unknown cvohe variant: " + variant);
      }
      break;
    case GateKind::CPauli:
    case GateKind::RPauli:
      g.control = atom_from_json(j.at("control"));
      g.targets = j.at("targets").get<std::vector<int>>();
      g.pauli = j.at("pauli").get<std::string>();
      g.sign = j.value("sign", 1.0);
      g.weight = j.at("weight").get<double>();
      g.charged_targets = j.value("charged_targets", -1);
      break;
    case GateKind::CXR:
      g.control = atom_from_json(j.at("control"));
      g.reg = j.at("reg").get<int>();
      g.targets = j.at("targets").get<std::vector<int>>();
      g.amp_sq_sum = j.at("amp_sq_sum").get<double>();
      g.weight = j.at("weight").get<double>();
      break;
    case GateKind::CPhase:
      if (j.contains("control")) g.control = atom_from_json(j["control"]);
      g.cphase_cost = j.value("cost", 4.0 / 3.0);
      break;
  }
  if (j.contains("path")) g.path = j["path"].get<std::vector<int>>();
  return g;
}

}  // namespace

Hamiltonian hamiltonian_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object() || !j.contains("n_sites") || !j.contains("terms"))
    throw InputError("hamiltonian JSON needs n_sites and terms");
  Hamiltonian h;
  if (!j["n_sites"].is_number_integer())
    throw InputError("n_sites must be an integer");
  h.n_sites = j["n_sites"].get<int>();
  if (!j["terms"].is_array()) throw InputError("terms must be an array");
  size_t idx = 0;
  for (const auto& tj : j["terms"]) {
    if (!tj.is_object() || !tj.contains("pauli") || !tj.contains("coeff"))
      throw InputError("term " + std::to_string(idx) + ": needs pauli and coeff");
    PauliTerm t;
    t.pauli = tj["pauli"].get<std::string>();
    if (!tj["coeff"].is_number())
      throw InputError("term " + std::to_string(idx) + ": coeff must be a number");
    t.coeff = tj["coeff"].get<double>();
    h.terms.push_back(std::move(t));
    ++idx;
  }
  h.validate();
  return h;
}

std::string hamiltonian_to_json(const Hamiltonian& ham) {
  Json j;
  j["n_sites"] = ham.n_sites;
  j["terms"] = Json::array();
  for (const auto& t : ham.terms) {
    Json tj;
    tj["pauli"] = t.pauli;
    tj["coeff"] = t.coeff;
    j["terms"].push_back(std::move(tj));
  }
  return j.dump(2) + "\n";
}

CircuitIR circuit_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw InputError("circuit JSON must be an object");
  CircuitIR ir;
  ir.version = j.value("version", 0);
  if (ir.version != 1)
    throw InputError("unsupported circuit version " + std::to_string(ir.version));
  if (!j.contains("registers") || !j["registers"].is_array())
    throw InputError("circuit JSON needs a registers array");
  for (const auto& rj : j["registers"]) {
    Register r;
    r.name = rj.at("name").get<std::string>();
    r.atoms = rj.at("atoms").get<int>();
    r.role = register_role_from_name(rj.at("role").get<std::string>());
    ir.registers.push_back(std::move(r));
  }
  if (!j.contains("layers") || !j["layers"].is_array())
    throw InputError("circuit JSON needs a layers array");
  for (const auto& lj : j["layers"]) {
    Layer lay;
    lay.declared_depth = lj.value("declared_depth", -1.0);
    if (lj.contains("gates"))
      for (const auto& gj : lj["gates"]) lay.gates.push_back(gate_from_json(gj));
    ir.layers.push_back(std::move(lay));
  }
  if (j.contains("metadata"))
    for (const auto& [key, value] : j["metadata"].items())
      ir.metadata[key] = value.get<double>();
  return ir;
}

std::string circuit_to_json(const CircuitIR& ir) {
  Json j;
  j["version"] = ir.version;
  j["registers"] = Json::array();
  for (const auto& r : ir.registers) {
    Json rj;
    rj["name"] = r.name;
    rj["atoms"] = r.atoms;
    rj["role"] = register_role_name(r.role);
    j["registers"].push_back(std::move(rj));
  }
  j["layers"] = Json::array();
  for (const auto& lay : ir.layers) {
    Json lj;
    if (lay.declared_depth >= 0.0) lj["declared_depth"] = lay.declared_depth;
    lj["gates"] = Json::array();
    for (const auto& g : lay.gates) lj["gates"].push_back(gate_to_json(g));
    j["layers"].push_back(std::move(lj));
  }
  if (!ir.metadata.empty()) {
    Json mj;
    for (const auto& [key, value] : ir.metadata) mj[key] = value;
    j["metadata"] = std::move(mj);
  }
  return j.dump(2) + "\n";
}

std::string report_to_json(const ResourceReport& report) {
  Json j;
  j["ebgc"] = report.ebgc;
  j["depth"] = report.depth;
  j["ancilla_atoms"] = report.ancilla_atoms;
  Json by_kind;
  for (const auto& [kind, cost] : report.ebgc_by_kind) by_kind[kind] = cost;
  j["ebgc_by_kind"] = std::move(by_kind);
  return j.dump(2) + "\n";
}

}  // namespace rqsp
