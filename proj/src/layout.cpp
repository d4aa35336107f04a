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

#include "rqsp/layout.hpp"

#include <cmath>
#include <numbers>

#include "rqsp/util.hpp"

namespace rqsp {
namespace {
constexpr double kPi = std::numbers::pi;

void check_population(double p) {
  if (!(p >= 0.0) || p > 1.0 + 1e-12)
    throw InputError("control population must be in [0, 1]");
}
}  // namespace

void LayoutSpec::validate() const {
  if (dim < 1 || dim > 3) throw InputError("layout dimension must be 1, 2 or 3");
  if (!(atom_pitch_um > 0.0)) throw InputError("atom pitch must be positive");
  if (!(blockade_radius_um > 0.0)) throw InputError("blockade radius must be positive");
  if (atom_pitch_um > blockade_radius_um)
    throw InputError("atom pitch exceeds the blockade radius; no atom pair interacts");
}

int partition_subsystems(int n_atoms, const LayoutSpec& spec) {
  spec.validate();
  if (n_atoms < 1) throw InputError("partition needs at least one atom");
  const double ratio = std::pow(spec.atom_pitch_um / spec.blockade_radius_um, spec.dim);
  const int n_sub = static_cast<int>(std::ceil(n_atoms * ratio - 1e-12));
  return n_sub < 1 ? 1 : n_sub;
}

CostPair fanout_cost(int n_targets, double p, const LayoutSpec& spec) {
  spec.validate();
  check_population(p);
  if (n_targets < 1) throw InputError("fanout needs at least one target");
  return {p * n_targets, 3.0 * ceil_root(n_targets, spec.dim)};
}

CostPair state_transfer_cost(int hops, double p) {
  check_population(p);
  if (hops < 0) throw InputError("hop count must be non-negative");
  return {2.0 * hops * p, 6.0 * hops};
}

CostPair scalable_cpauli_cost(int k, int n_sub_c, int n_sub_t, double p,
                              const LayoutSpec& spec) {
  spec.validate();
  check_population(p);
  if (k < 1 || k > 16)
    throw InputError("controlled Pauli width " + std::to_string(k) +
                     " outside the supported range [1, 16]");
  if (n_sub_c < 1 || n_sub_t < 1) throw InputError("subsystem counts must be >= 1");
  if (n_sub_c == 1 && n_sub_t == 1) {
    // Whole gate inside one blockade disk: the plain native gate.
    return {(2.0 + k) / 3.0 * p, 3.0};
  }
  const double h_c = ceil_root(n_sub_c, spec.dim);
  const double h_t = ceil_root(n_sub_t, spec.dim);
  CostPair cost;
  cost.ebgc = p * (2.0 * (k - 1) * h_c + k * h_t + k);
  cost.depth = 2.0 * (6.0 * h_c * (k - 1) + 3.0 * ceil_root(k, spec.dim)) + 3.0;
  return cost;
}

CostPair scalable_vohe_cost(const std::vector<double>& betas, const LayoutSpec& spec) {
  spec.validate();
  if (betas.empty()) throw InputError("register rotation needs at least one subsystem");
  double total = 0.0;
  for (double b : betas) {
    if (!(b >= 0.0)) throw InputError("subsystem amplitudes must be non-negative");
    total += b * b;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InputError("subsystem amplitudes are not normalized");

  if (betas.size() == 1) {
    // Single blockade disk: plain rotation plus its steering pulse.
    return {1.0 + std::asin(std::min(betas[0], 1.0)) / (3.0 * kPi), 2.5};
  }

  CostPair cost;
  double mass_before = 0.0;  // S_{j-1}
  for (size_t j = 0; j < betas.size(); ++j) {
    const double beta = std::min(betas[j], 1.0);
    const double mass_after = mass_before + beta * beta;  // S_j
    const double steer = std::asin(beta);
    cost.ebgc += (j > 0 ? 2.0 * mass_before : 0.0) + steer / (3.0 * kPi) +
                 (5.0 / 3.0) * beta * beta + mass_after;
    cost.depth += (j > 0 ? 6.0 : 0.0) + steer / kPi + 4.0 + 3.0;
    mass_before = mass_after;
  }
  return cost;
}

}  // namespace rqsp
