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

#include "rqsp/qsp.hpp"

#include <cmath>
#include <numbers>

#include "rqsp/util.hpp"

namespace rqsp {
namespace {

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 phase_gate(double phi) {
  return {std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi)};
}

}  // namespace

Mat2 qsp_iterate(double x) {
  if (x < -1.0 || x > 1.0) throw InputError("signal value outside [-1, 1]");
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  return {Complex(x, 0), Complex(-s, 0), Complex(s, 0), Complex(x, 0)};
}

Mat2 qsp_product(const QspSequence& seq, double x) {
  if (seq.phases.empty()) throw InputError("phase sequence is empty");
  const Mat2 r = qsp_iterate(x);
  Mat2 m = phase_gate(seq.phases[0]);
  for (size_t i = 1; i < seq.phases.size(); ++i)
    m = mul(phase_gate(seq.phases[i]), mul(r, m));
  return m;
}

Complex qsp_evaluate(const QspSequence& seq, double x) { return qsp_product(seq, x)[0]; }

double qsp_constraint_check(const QspSequence& seq, const std::vector<double>& xs) {
  double worst = 0.0;
  for (double x : xs) {
    const Mat2 m = qsp_product(seq, x);
    // M M^dag - I, max absolute entry
    const Complex d00 = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]) - 1.0;
    const Complex d01 = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
    const Complex d11 = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]) - 1.0;
    worst = std::max({worst, std::abs(d00), std::abs(d01), std::abs(d11)});
  }
  return worst;
}

Complex walk_element_model(const QspSequence& seq, double lambda) {
  if (lambda < -1.0 || lambda > 1.0) throw InputError("eigenvalue outside [-1, 1]");
  const double theta = std::acos(std::clamp(lambda, -1.0, 1.0));
  Complex sum = 0.0;
  for (double eta : {+1.0, -1.0}) {
    // Z_{phi_0}, then per iterate the branch phase and X_{phi_i}.
    Mat2 m = {std::polar(1.0, seq.phases[0]), 0.0, 0.0, std::polar(1.0, -seq.phases[0])};
    const Mat2 d = {1.0, 0.0, 0.0, std::polar(1.0, eta * theta)};
    for (size_t i = 1; i < seq.phases.size(); ++i) {
      const double c = std::cos(seq.phases[i]), s = std::sin(seq.phases[i]);
      const Mat2 x = {Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0)};
      m = mul(x, mul(d, m));
    }
    sum += m[3];  // <1|...|1>
  }
  return 0.5 * sum;
}

QueryCount query_complexity(double alpha_t, double eps) {
  if (alpha_t < 0.0) throw InputError("alpha_t must be non-negative");
  if (!(eps > 0.0) || eps >= 1.0) throw InputError("eps must be in (0, 1)");
  const double log_term = std::log(1.0 / eps);
  auto objective = [&](double q) { return std::exp(q) * alpha_t + log_term / q; };
  QueryCount out;
  out.q_opt = golden_section_min(objective, 1e-6, 20.0, 1e-10);
  out.objective = objective(out.q_opt);
  out.k_star = static_cast<int>(std::ceil(out.objective - 1e-12));
  if (out.k_star < 1) out.k_star = 1;
  return out;
}

CircuitIR assemble_qsp_protocol(const LcuPlan& plan, const QspSequence& seq) {
  if (seq.phases.empty()) throw InputError("phase sequence is empty");
  CircuitIR ir = compile_controlled_walk(plan);
  const int exit_reg = ir.register_index("exit");
  const AtomRef exit_atom{exit_reg, 0};

  CircuitIR out;
  out.registers = ir.registers;
  {
    Layer lay;
    lay.gates.push_back(make_rotation(exit_atom, 'z', -seq.phases[0]));
    out.layers.push_back(std::move(lay));
  }
  for (size_t i = 1; i < seq.phases.size(); ++i) {
    out.layers.insert(out.layers.end(), ir.layers.begin(), ir.layers.end());
    Layer lay;
    lay.gates.push_back(make_rotation(exit_atom, 'x', -seq.phases[i]));
    out.layers.push_back(std::move(lay));
  }
  out.metadata["iterates"] = static_cast<double>(seq.iterates());
  return out;
}

}  // namespace rqsp
