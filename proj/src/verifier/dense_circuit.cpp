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

#include <stdexcept>

#include "rqsp/util.hpp"
#include "rqsp/verifier.hpp"

namespace rqsp {
namespace {

constexpr int kMaxDenseQubits = 14;

std::vector<int> register_qubits(const DenseLayout& lay, int reg) {
  std::vector<int> qs(static_cast<size_t>(lay.reg_atoms[static_cast<size_t>(reg)]));
  for (size_t i = 0; i < qs.size(); ++i)
    qs[i] = lay.reg_offset[static_cast<size_t>(reg)] + static_cast<int>(i);
  return qs;
}

}  // namespace

DenseLayout make_dense_layout(const CircuitIR& ir) {
  DenseLayout lay;
  int offset = 0;
  for (const auto& reg : ir.registers) {
    lay.reg_offset.push_back(offset);
    lay.reg_atoms.push_back(reg.atoms);
    if (reg.role == RegisterRole::System) lay.n_system = reg.atoms;
    offset += reg.atoms;
  }
  lay.total_qubits = offset;
  if (offset > kMaxDenseQubits)
    throw InputError("dense model limited to " + std::to_string(kMaxDenseQubits) +
                     " qubits, circuit needs " + std::to_string(offset));
  return lay;
}

void apply_gate_dense(kernels::State& v, const NativeGate& g, const DenseLayout& lay,
                      bool dagger) {
  using namespace kernels;
  switch (g.kind) {
    case GateKind::Rotation: {
      apply_rotation(v, lay.qubit_of(g.atom), g.axis, dagger ? -g.theta : g.theta);
      return;
    }
    case GateKind::VOhe:
    case GateKind::CVOhe: {
      const int control =
          g.kind == GateKind::CVOhe ? lay.qubit_of(g.control) : -1;
      const auto reg_qs = register_qubits(lay, g.reg);
      if (!g.tilde) {
        apply_ohe_rotation(v, reg_qs, g.amps, dagger, control);
        return;
      }
      // tilde: (1 - 2 Pi_0) V^dag; its inverse is V (1 - 2 Pi_0).
      if (!dagger) {
        apply_ohe_rotation(v, reg_qs, g.amps, /*dagger=*/true, control);
        apply_zero_sector_flip(v, reg_qs, control);
      } else {
        apply_zero_sector_flip(v, reg_qs, control);
        apply_ohe_rotation(v, reg_qs, g.amps, /*dagger=*/false, control);
      }
      return;
    }
    case GateKind::CPauli: {
      // Self-inverse; dagger is the same operation.
      const int control = lay.qubit_of(g.control);
      const auto masks = compile_pauli(g.pauli, 0);
      apply_controlled_pauli(v, control, masks);
      if (g.sign < 0) apply_phase_flip(v, control);
      return;
    }
    case GateKind::CPhase: {
      apply_phase_flip(v, g.control.valid() ? lay.qubit_of(g.control) : -1);
      return;
    }
    case GateKind::RPauli:
    case GateKind::CXR:
      throw std::logic_error(
          "dense semantics cover single-level plans only; excitation-fan gates drive "
          "a third atomic level");
  }
  throw std::logic_error("unreachable gate kind");
}

void apply_circuit_dense(kernels::State& v, const CircuitIR& ir, const DenseLayout& lay,
                         bool dagger) {
  if (v.size() != static_cast<size_t>(lay.dim()))
    throw std::logic_error("state size does not match layout");
  if (!dagger) {
    for (const auto& layer : ir.layers)
      for (const auto& g : layer.gates) apply_gate_dense(v, g, lay, false);
    return;
  }
  for (auto layer = ir.layers.rbegin(); layer != ir.layers.rend(); ++layer)
    for (auto g = layer->gates.rbegin(); g != layer->gates.rend(); ++g)
      apply_gate_dense(v, *g, lay, true);
}

Eigen::MatrixXcd dense_matrix(const CircuitIR& ir, const DenseLayout& lay) {
  const std::int64_t dim = lay.dim();
  Eigen::MatrixXcd m(dim, dim);
  kernels::State v(static_cast<size_t>(dim));
  for (std::int64_t j = 0; j < dim; ++j) {
    std::fill(v.begin(), v.end(), kernels::Complex(0, 0));
    v[static_cast<size_t>(j)] = 1.0;
    apply_circuit_dense(v, ir, lay);
    for (std::int64_t i = 0; i < dim; ++i) m(i, j) = v[static_cast<size_t>(i)];
  }
  return m;
}

Eigen::MatrixXcd encoded_operator(const LcuPlan& plan) {
  const int n = plan.ham.n_sites;
  if (n > kMaxDenseQubits) throw InputError("system too large for the dense model");
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  const auto weights = plan.ham.normalized_weights();
  static const kernels::Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (size_t ti = 0; ti < plan.ham.terms.size(); ++ti) {
    const auto& term = plan.ham.terms[ti];
    const double w = weights[ti] * (term.coeff < 0 ? -1.0 : 1.0);
    if (w == 0.0) continue;
    const auto m = compile_pauli(term.pauli, 0);
    for (std::int64_t j = 0; j < dim; ++j) {
      kernels::Complex ph = kIPow[m.y_count & 3];
      if (__builtin_popcountll(static_cast<std::uint64_t>(j) & m.z_mask) & 1) ph = -ph;
      a(static_cast<std::int64_t>(static_cast<std::uint64_t>(j) ^ m.x_mask), j) += w * ph;
    }
  }
  return a;
}

}  // namespace rqsp
