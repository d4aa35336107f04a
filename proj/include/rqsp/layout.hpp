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

#include <vector>

namespace rqsp {

// Geometric scaling model: atoms on a pitch-spaced lattice in d dimensions,
// interactions limited to a blockade radius. Protocols wider than one
// blockade disk split into subsystems connected by excitation transfers.
struct LayoutSpec {
  int dim = 1;
  double blockade_radius_um = 0.0;
  double atom_pitch_um = 0.0;

  void validate() const;  // dim in {1,2,3}, 0 < pitch <= radius
};

struct CostPair {
  double ebgc = 0.0;
  double depth = 0.0;
};

// Number of blockade-sized subsystems needed for n_atoms at the given
// geometry: ceil(n_atoms * pitch^d / radius^d), at least 1 for n_atoms >= 1.
int partition_subsystems(int n_atoms, const LayoutSpec& spec);

// Fanning one excitation onto n_targets atoms inside one subsystem, control
// population p: EBGC p * n_targets, duration 3 * ceil(n_targets^(1/d)).
CostPair fanout_cost(int n_targets, double p, const LayoutSpec& spec);

// Moving an excitation across `hops` subsystem boundaries: EBGC 2 p per hop,
// duration 6 per hop.
CostPair state_transfer_cost(int hops, double p);

// k-target controlled Pauli whose control and target registers span several
// subsystems (n_sub_c and n_sub_t). Within one subsystem it reduces exactly
// to the plain gate ((2+k)/3 p, duration 3). Across subsystems, with
// h = ceil(n_sub^(1/d)) boundary hops per side:
//   EBGC  = p * (2 (k-1) h_c + k h_t + k)
//   depth = 2 (6 h_c (k-1) + 3 ceil(k^(1/d))) + 3.
// k must be in [1, 16] (wider gates are rejected with a diagnostic).
CostPair scalable_cpauli_cost(int k, int n_sub_c, int n_sub_t, double p,
                              const LayoutSpec& spec);

// Register rotation distributed over n_sub subsystems, subsystem j receiving
// amplitude beta_j (sum of squares 1). One subsystem is the plain rotation
// plus its steering pulse: EBGC 1 + |asin beta_1| / (3 pi), duration 2.5.
// Several subsystems run the antenna chain: per subsystem j, with
// S_j = sum_{i<=j} beta_i^2,
//   EBGC_j  = 2 S_{j-1} [j>1]  +  |asin beta_j| / (3 pi)  +  (5/3) beta_j^2  +  S_j
//   depth_j = 6 [j>1]  +  |asin beta_j| / pi  +  4  +  3,
// summed over j (a serial chain, so depth is linear in n_sub).
CostPair scalable_vohe_cost(const std::vector<double>& betas, const LayoutSpec& spec);

}  // namespace rqsp
