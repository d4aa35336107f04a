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

#include "rqsp/planner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rqsp/compiler.hpp"
#include "rqsp/qsp.hpp"
#include "rqsp/util.hpp"

namespace rqsp {
namespace {

constexpr double kPi = std::numbers::pi;

// First-order segment costs for the n-site chain over step delta:
// per segment 6n gate-cost units plus the rotation angles, and a fixed
// 48-slot schedule plus the rotation durations.
double pf1_segment_ebgc(int n, double delta) {
  return n * (6.0 + 4.0 * delta / (3.0 * kPi));
}
double pf1_segment_depth(double delta) { return 48.0 + 7.0 * delta / kPi; }

}  // namespace

MethodPlan plan_qsp(const LcuPlan& plan, double t, double eps) {
  const auto cw = account(compile_controlled_walk(plan));
  const double alpha_t = plan.one_norm * t;
  const QueryCount qc = query_complexity(alpha_t, eps);

  MethodPlan out;
  out.method = "qsp";
  out.n_site = plan.ham.n_sites;
  out.k_star = qc.k_star;
  out.ebgc = qc.k_star * (cw.ebgc + 1.0);
  out.depth = qc.k_star * (cw.depth + 1.0);
  out.ancillae = cw.ancilla_atoms;
  return out;
}

MethodPlan plan_qsp(const PlanRequest& req) {
  return plan_qsp(heisenberg_benchmark_plan(req.n_site, req.seed),
                  req.evolution_time(), req.eps);
}

MethodPlan plan_pf4(int n, double t, double /*eps*/, PfCharge charge) {
  const auto r4 = static_cast<std::int64_t>(
      std::ceil(4.0 * std::pow(static_cast<double>(n), 1.555) - 1e-9));
  const double dt = t / static_cast<double>(r4);

  double seg_ebgc = 0.0, seg_depth = 0.0;
  if (charge == PfCharge::ComposedFourthOrder) {
    // Five second-order substeps per segment, each two first-order
    // applications of half its coefficient.
    const double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / 3.0));
    const double coeffs[5] = {p, p, 1.0 - 4.0 * p, p, p};
    for (double c : coeffs) {
      const double half = std::abs(c) * dt / 2.0;
      seg_ebgc += 2.0 * pf1_segment_ebgc(n, half);
      seg_depth += 2.0 * pf1_segment_depth(half);
    }
  } else {
    seg_ebgc = pf1_segment_ebgc(n, dt);
    seg_depth = pf1_segment_depth(dt);
  }

  MethodPlan out;
  out.method = charge == PfCharge::ComposedFourthOrder ? "pf4" : "pf4_first_order";
  out.n_site = n;
  out.ebgc = static_cast<double>(r4) * seg_ebgc;
  out.depth = static_cast<double>(r4) * seg_depth;
  out.ancillae = (n + 1) / 2;
  out.r_segments = r4;
  return out;
}

MethodPlan plan_pf4(const PlanRequest& req, PfCharge charge) {
  return plan_pf4(req.n_site, req.evolution_time(), req.eps, charge);
}

MethodPlan plan_haah_1d(const LcuPlan& plan, double t, double eps) {
  const int n = plan.ham.n_sites;
  if (n < 6) throw InputError("block-decimated planning needs at least 6 sites");

  const auto cw = account(compile_controlled_walk(plan));

  MethodPlan best;
  best.method = "haah_1d";
  best.n_site = n;
  bool have = false;

  const int l_max = std::max(2, n / 4);
  for (int l = 2; l <= l_max; ++l) {
    // Decimation budget: each box must reach eps / (3 m) where the box count
    // m itself depends on the box time; solve for the fixed point in t_box.
    const double exponent = l + 0.95;
    auto gap = [&](double t_box) {
      const double decim = 0.175 * std::pow(7.9 * t_box / exponent, exponent);
      return decim - eps * t_box * l / (24.0 * t * n);
    };
    double hi = exponent / 7.9;
    int expand = 0;
    while (gap(hi) <= 0.0 && expand++ < 60) hi *= 2.0;
    const double t_box = bisect_root(gap, 1e-6, hi, 1e-12);

    const double m = 8.0 * t * n / (t_box * l);
    const double eps_box = eps / (3.0 * m);
    const int k_half = query_complexity(t_box * l, eps_box).k_star;
    const int k_full = query_complexity(t_box * 2.0 * l, eps_box).k_star;

    MethodPlan cand;
    cand.method = "haah_1d";
    cand.n_site = n;
    cand.ebgc = (m / 2.0) * k_full * (cw.ebgc + 1.0);
    cand.depth = 2.0 * (t / t_box) * (k_half + 2.0 * k_full) * (cw.depth + 1.0);
    cand.ancillae = static_cast<int>(
        std::ceil(static_cast<double>(n) / (2.0 * l) * (2.0 * l + 6.0) - 1e-9));
    cand.k_star = k_full;
    cand.l_block = l;
    cand.t_box = t_box;
    if (!have || cand.ebgc < best.ebgc) {
      best = cand;
      have = true;
    }
  }
  return best;
}

MethodPlan plan_haah_1d(const PlanRequest& req) {
  return plan_haah_1d(heisenberg_benchmark_plan(req.n_site, req.seed),
                      req.evolution_time(), req.eps);
}

std::vector<MethodPlan> compare_methods(const PlanRequest& req) {
  return {plan_qsp(req), plan_pf4(req, PfCharge::ComposedFourthOrder),
          plan_pf4(req, PfCharge::SingleExponentialRow), plan_haah_1d(req)};
}

std::vector<MethodPlan> sweep_methods(const std::vector<int>& n_values,
                                      std::uint64_t seed, double eps,
                                      double time_factor) {
  std::vector<MethodPlan> rows;
  for (int n : n_values) {
    PlanRequest req;
    req.n_site = n;
    req.seed = seed;
    req.eps = eps;
    req.time_factor = time_factor;
    rows.push_back(plan_qsp(req));
    rows.push_back(plan_pf4(req, PfCharge::ComposedFourthOrder));
    rows.push_back(plan_haah_1d(req));
  }
  return rows;
}

std::string plans_to_csv(const std::vector<MethodPlan>& plans) {
  std::string out = "n_site,method,ebgc,depth,ancillae,k_star,r_segments,l,t_box\n";
  for (const auto& p : plans) {
    out += std::to_string(p.n_site);
    out += ',';
    out += p.method;
    out += ',';
    out += format_double(p.ebgc);
    out += ',';
    out += format_double(p.depth);
    out += ',';
    out += std::to_string(p.ancillae);
    out += ',';
    out += std::to_string(p.k_star);
    out += ',';
    out += std::to_string(p.r_segments);
    out += ',';
    out += std::to_string(p.l_block);
    out += ',';
    out += format_double(p.t_box);
    out += '\n';
  }
  return out;
}

std::vector<MethodPlan> plans_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) ||
      line != "n_site,method,ebgc,depth,ancillae,k_star,r_segments,l,t_box")
    throw InputError("unrecognized csv header");
  std::vector<MethodPlan> rows;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 9)
      throw InputError("csv line " + std::to_string(line_no) + ": expected 9 fields, got " +
                       std::to_string(fields.size()));
    MethodPlan p;
    try {
      p.n_site = std::stoi(fields[0]);
      p.method = fields[1];
      p.ebgc = std::stod(fields[2]);
      p.depth = std::stod(fields[3]);
      p.ancillae = std::stoi(fields[4]);
      p.k_star = std::stoi(fields[5]);
      p.r_segments = std::stoll(fields[6]);
      p.l_block = std::stoi(fields[7]);
      p.t_box = std::stod(fields[8]);
    } catch (const std::exception&) {
      throw InputError("csv line " + std::to_string(line_no) + ": malformed number");
    }
    rows.push_back(std::move(p));
  }
  return rows;
}

}  // namespace rqsp
