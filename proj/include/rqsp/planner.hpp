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

#include <cstdint>
#include <string>
#include <vector>

namespace rqsp {

struct LcuPlan;

// End-to-end resource estimates for simulating the disordered Heisenberg
// benchmark chain to time t = time_factor * n_site at target error eps.
struct PlanRequest {
  int n_site = 10;
  std::uint64_t seed = 1;
  double eps = 1e-3;
  double time_factor = 4.0;

  double evolution_time() const { return time_factor * n_site; }
};

struct MethodPlan {
  std::string method;
  int n_site = 0;
  double ebgc = 0.0;
  double depth = 0.0;
  int ancillae = 0;
  // method-specific diagnostics (0 when not applicable)
  int k_star = 0;            // walk queries (qsp), block queries at 2l (haah)
  std::int64_t r_segments = 0;  // product-formula segments
  int l_block = 0;           // decimation buffer size (haah)
  double t_box = 0.0;        // per-box evolution time (haah)
};

// Phase-transduction route: k* controlled walk steps on the full chain,
// alpha t = (coefficient one-norm) * t.
MethodPlan plan_qsp(const PlanRequest& req);
MethodPlan plan_qsp(const LcuPlan& plan, double t, double eps);

// Fourth-order product formula, r4 = ceil(4 n^1.555) segments. The composed
// charge books each segment as its five second-order substeps, every substep
// two first-order applications of half its coefficient; the first-order row
// books one first-order application per segment (the per-exponential lower
// envelope some tables quote).
enum class PfCharge { ComposedFourthOrder, SingleExponentialRow };
MethodPlan plan_pf4(const PlanRequest& req, PfCharge charge = PfCharge::ComposedFourthOrder);
MethodPlan plan_pf4(int n_site, double t, double eps,
                    PfCharge charge = PfCharge::ComposedFourthOrder);

// Block-decimated evolution: the chain splits into boxes of 2l sites evolved
// for t_box each, buffers of l sites decimated; t_box solves the decimation
// error budget eps/(3m) with m = 8 t n / (t_box l) boxes, and each box runs
// the phase-transduction route. l is chosen in [2, n/4] to minimize EBGC.
MethodPlan plan_haah_1d(const PlanRequest& req);
MethodPlan plan_haah_1d(const LcuPlan& plan, double t, double eps);

// The full comparison: qsp, pf4 (both charges), haah_1d.
std::vector<MethodPlan> compare_methods(const PlanRequest& req);

// Sweep rows for every n in n_values (independent draws per n from the same
// seed): one row per headline method, order qsp, pf4, haah_1d, n ascending.
std::vector<MethodPlan> sweep_methods(const std::vector<int>& n_values,
                                      std::uint64_t seed, double eps,
                                      double time_factor = 4.0);

// CSV with the fixed header
//   n_site,method,ebgc,depth,ancillae,k_star,r_segments,l,t_box
// and shortest-round-trip numeric formatting (byte-stable across runs).
std::string plans_to_csv(const std::vector<MethodPlan>& plans);
std::vector<MethodPlan> plans_from_csv(const std::string& csv);

}  // namespace rqsp
