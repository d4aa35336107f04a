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

#include "rqsp/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rqsp/util.hpp"

namespace rqsp {
namespace {

// Registers shared by every builder: system, then one address register per
// tree level. `with_exit` appends the exit atom used by controlled builders.
std::vector<Register> plan_registers(const LcuPlan& plan, bool with_exit) {
  std::vector<Register> regs;
  regs.push_back({"system", plan.ham.n_sites, RegisterRole::System});
  for (int j = 0; j < plan.levels(); ++j)
    regs.push_back({"addr" + std::to_string(j + 1),
                    plan.branching[static_cast<size_t>(j)], RegisterRole::Address});
  if (with_exit) regs.push_back({"exit", 1, RegisterRole::Exit});
  return regs;
}

// Enumerates all paths of the given length in row-major order.
void for_each_path(const std::vector<int>& branching, int length,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> path(static_cast<size_t>(length), 0);
  std::function<void(int)> rec = [&](int level) {
    if (level == length) {
      fn(path);
      return;
    }
    for (int l = 0; l < branching[static_cast<size_t>(level)]; ++l) {
      path[static_cast<size_t>(level)] = l;
      rec(level + 1);
    }
  };
  rec(0);
}

// Address register IR index for tree level j (0-based): system is 0.
int addr_reg(int level) { return level + 1; }

std::vector<int> term_sites(const PauliTerm& term) {
  std::vector<int> sites;
  for (size_t i = 0; i < term.pauli.size(); ++i)
    if (term.pauli[i] != 'I') sites.push_back(static_cast<int>(i));
  return sites;
}

// The preparation schedule as (gate, declared-slot) layers; `tilde` reverses
// it and conjugates every rotation.
std::vector<Layer> prep_layers(const LcuPlan& plan, bool tilde) {
  std::vector<Layer> layers;
  const auto root_amps = plan.tree.child_amplitudes({});
  Layer root_layer;
  root_layer.gates.push_back(make_vohe(addr_reg(0), root_amps, tilde));
  if (!tilde) layers.push_back(std::move(root_layer));

  // Internal nodes at levels 1..k-1, one controlled rotation each. Every node
  // occupies its slot even at zero mass (fixed hardware schedule).
  std::vector<Layer> inner;
  for (int level = 1; level < plan.levels(); ++level) {
    for_each_path(plan.branching, level, [&](const std::vector<int>& path) {
      Layer lay;
      AtomRef control{addr_reg(level - 1), path.back()};
      auto g = make_cvohe(addr_reg(level), plan.tree.child_amplitudes(path), control,
                          plan.tree.node_prob(path), CVoheVariant::PreparationTree, tilde);
      g.path = path;
      lay.gates.push_back(std::move(g));
      inner.push_back(std::move(lay));
    });
  }
  if (tilde) {
    std::reverse(inner.begin(), inner.end());
    layers = std::move(inner);
    layers.push_back(std::move(root_layer));
  } else {
    layers.insert(layers.end(), std::make_move_iterator(inner.begin()),
                  std::make_move_iterator(inner.end()));
  }
  return layers;
}

// One parallel slot of excited-control Paulis for the leaves under `path`
// (length k-1). Empty slots still occupy unit duration.
Layer leaf_pauli_layer(const LcuPlan& plan, const std::vector<int>& path) {
  Layer lay;
  lay.declared_depth = 1.0;
  const int k = plan.levels();
  std::vector<int> leaf_path = path;
  leaf_path.push_back(0);
  for (int i = 0; i < plan.branching[static_cast<size_t>(k) - 1]; ++i) {
    leaf_path.back() = i;
    const std::int64_t leaf = plan.tree.leaf_index(leaf_path);
    const std::int64_t term_idx = plan.term_for_leaf[static_cast<size_t>(leaf)];
    if (term_idx < 0) continue;
    const double p = plan.tree.leaf_prob(leaf);
    if (p <= 0.0) continue;
    const auto& term = plan.ham.terms[static_cast<size_t>(term_idx)];
    auto sites = term_sites(term);
    if (sites.empty()) continue;  // identity term: nothing to drive
    auto g = make_rpauli({addr_reg(k - 1), i}, std::move(sites), term.pauli, p);
    g.sign = term.coeff < 0 ? -1.0 : 1.0;
    g.charged_targets = plan.support_ceiling;
    g.path = leaf_path;
    lay.gates.push_back(std::move(g));
  }
  return lay;
}

// Fan/uncompute recursion for trees with >= 2 levels. `path` has length
// m in [0, k-1); each call covers the subtree under it.
void emit_fan_stage(const LcuPlan& plan, const std::vector<int>& path,
                    std::vector<Layer>& out) {
  const int m = static_cast<int>(path.size());
  const int k = plan.levels();
  if (m == k - 1) {
    out.push_back(leaf_pauli_layer(plan, path));
    return;
  }
  std::vector<int> child = path;
  child.push_back(0);
  for (int l = 0; l < plan.branching[static_cast<size_t>(m)]; ++l) {
    child.back() = l;
    const double p = plan.tree.node_prob(child);
    const auto amps = plan.tree.child_amplitudes(child);
    double s2 = 0.0;
    for (double a : amps) s2 += a * a;
    std::vector<int> fan_targets(static_cast<size_t>(plan.branching[static_cast<size_t>(m) + 1]));
    std::iota(fan_targets.begin(), fan_targets.end(), 0);

    AtomRef control{addr_reg(m), l};
    auto fan = make_cxr(control, addr_reg(m + 1), fan_targets, s2, p);
    fan.path = child;
    Layer fan_layer;
    fan_layer.gates.push_back(fan);
    out.push_back(fan_layer);

    emit_fan_stage(plan, child, out);

    Layer unfan_layer;
    unfan_layer.gates.push_back(std::move(fan));
    out.push_back(std::move(unfan_layer));
  }
}

Layer phase_layer(bool controlled, int exit_reg) {
  Layer lay;
  if (controlled) {
    lay.gates.push_back(make_cphase({exit_reg, 0}));
    lay.declared_depth = 4.0;
  } else {
    lay.gates.push_back(make_cphase({}));
    lay.declared_depth = 1.0;
  }
  return lay;
}

}  // namespace

LcuPlan make_lcu_plan(const Hamiltonian& ham, std::vector<int> branching,
                      int support_ceiling) {
  ham.validate();
  if (branching.empty()) throw InputError("plan needs at least one tree level");
  for (int b : branching)
    if (b < 1) throw InputError("branching factors must be >= 1");

  LcuPlan plan;
  plan.ham = ham;
  plan.one_norm = ham.one_norm();
  plan.branching = std::move(branching);
  plan.support_ceiling = support_ceiling;

  const auto weights = ham.normalized_weights();
  std::vector<std::int64_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return weights[static_cast<size_t>(a)] > weights[static_cast<size_t>(b)];
  });

  std::int64_t leaves = 1;
  for (int b : plan.branching) leaves *= b;
  if (leaves < static_cast<std::int64_t>(weights.size()))
    throw InputError("tree with " + std::to_string(leaves) + " leaves cannot address " +
                     std::to_string(weights.size()) + " terms");

  std::vector<double> packed(static_cast<size_t>(leaves), 0.0);
  plan.term_for_leaf.assign(static_cast<size_t>(leaves), -1);
  for (size_t slot = 0; slot < order.size(); ++slot) {
    packed[slot] = weights[static_cast<size_t>(order[slot])];
    plan.term_for_leaf[slot] = order[slot];
  }
  plan.tree = CoefficientTree(plan.branching, std::move(packed));
  return plan;
}

LcuPlan heisenberg_benchmark_plan(int n_sites, std::uint64_t seed) {
  const auto ham = disordered_heisenberg_chain(n_sites, seed);
  return make_lcu_plan(ham, {7, n_sites}, /*support_ceiling=*/2);
}

CircuitIR compile_state_prep(const LcuPlan& plan) {
  CircuitIR ir;
  ir.registers = plan_registers(plan, false);
  ir.layers = prep_layers(plan, false);
  return ir;
}

CircuitIR compile_state_prep_tilde(const LcuPlan& plan) {
  CircuitIR ir;
  ir.registers = plan_registers(plan, false);
  ir.layers = prep_layers(plan, true);
  return ir;
}

CircuitIR compile_applied_paulis(const LcuPlan& plan) {
  CircuitIR ir;
  ir.registers = plan_registers(plan, false);
  if (plan.levels() == 1) {
    // Ground-manifold controls, one 3-slot gate per populated address.
    for (int l = 0; l < plan.branching[0]; ++l) {
      const std::int64_t term_idx = plan.term_for_leaf[static_cast<size_t>(l)];
      if (term_idx < 0) continue;
      const double p = plan.tree.leaf_prob(l);
      if (p <= 0.0) continue;
      const auto& term = plan.ham.terms[static_cast<size_t>(term_idx)];
      auto sites = term_sites(term);
      if (sites.empty()) continue;
      auto g = make_cpauli({addr_reg(0), l}, std::move(sites), term.pauli, p);
      g.sign = term.coeff < 0 ? -1.0 : 1.0;
      g.charged_targets = plan.support_ceiling;
      g.path = {l};
      Layer lay;
      lay.gates.push_back(std::move(g));
      ir.layers.push_back(std::move(lay));
    }
    return ir;
  }
  emit_fan_stage(plan, {}, ir.layers);
  return ir;
}

CircuitIR compile_walk(const LcuPlan& plan) {
  CircuitIR ir = compile_state_prep(plan);
  ir.append(compile_applied_paulis(plan));
  ir.append(compile_state_prep_tilde(plan));
  ir.layers.push_back(phase_layer(false, -1));
  const auto rep = account(ir);
  double cphase = 0.0;
  const auto it = rep.ebgc_by_kind.find("cphase");
  if (it != rep.ebgc_by_kind.end()) cphase = it->second;
  ir.metadata["walk_core_ebgc"] = rep.ebgc - cphase;
  return ir;
}

CircuitIR compile_controlled_walk(const LcuPlan& plan) {
  CircuitIR ir;
  ir.registers = plan_registers(plan, true);
  const int exit_reg = static_cast<int>(ir.registers.size()) - 1;
  const AtomRef exit_atom{exit_reg, 0};

  auto prep = prep_layers(plan, false);
  {
    // Root rotation becomes exit-conditioned (unit control population).
    auto& root = prep.front().gates.front();
    root = make_cvohe(root.reg, root.amps, exit_atom, 1.0, CVoheVariant::PreparationTree,
                      false);
  }
  auto tilde = prep_layers(plan, true);
  {
    auto& root = tilde.back().gates.front();
    root = make_cvohe(root.reg, root.amps, exit_atom, 1.0, CVoheVariant::PreparationTree,
                      true);
  }

  ir.layers = std::move(prep);
  auto ubar = compile_applied_paulis(plan);
  ir.layers.insert(ir.layers.end(), std::make_move_iterator(ubar.layers.begin()),
                   std::make_move_iterator(ubar.layers.end()));
  ir.layers.insert(ir.layers.end(), std::make_move_iterator(tilde.begin()),
                   std::make_move_iterator(tilde.end()));
  ir.layers.push_back(phase_layer(true, exit_reg));
  const auto rep = account(ir);
  double cphase = 0.0;
  const auto it = rep.ebgc_by_kind.find("cphase");
  if (it != rep.ebgc_by_kind.end()) cphase = it->second;
  ir.metadata["walk_core_ebgc"] = rep.ebgc - cphase;
  return ir;
}

}  // namespace rqsp
