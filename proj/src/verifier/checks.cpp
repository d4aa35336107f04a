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

#include <algorithm>
#include <cmath>

#include "rqsp/dense_linalg.hpp"
#include "rqsp/util.hpp"
#include "rqsp/verifier.hpp"

namespace rqsp {
namespace {

using Mat = Eigen::MatrixXcd;
using kernels::Complex;
using kernels::State;

struct WalkModel {
  CircuitIR prep, ubar, walk;
  DenseLayout lay;
  std::int64_t sys_dim = 0;
  std::int64_t full_dim = 0;
};

WalkModel build_walk_model(const LcuPlan& plan) {
  if (plan.levels() != 1)
    throw InputError("dense checks need a single-level plan (got " +
                     std::to_string(plan.levels()) + " tree levels)");
  WalkModel m;
  m.prep = compile_state_prep(plan);
  m.ubar = compile_applied_paulis(plan);
  m.walk = compile_walk(plan);
  m.lay = make_dense_layout(m.walk);
  m.sys_dim = std::int64_t{1} << plan.ham.n_sites;
  m.full_dim = m.lay.dim();
  return m;
}

// v <- U v with U = V^dag Ubar V (the block-encoding unitary).
void apply_encoding_unitary(State& v, const WalkModel& m) {
  apply_circuit_dense(v, m.prep, m.lay);
  apply_circuit_dense(v, m.ubar, m.lay);
  apply_circuit_dense(v, m.prep, m.lay, /*dagger=*/true);
}

// Ancilla-vacuum block of the map `apply` (system-indexed matrix).
template <typename ApplyFn>
Mat vacuum_block(const WalkModel& m, ApplyFn apply) {
  Mat block(m.sys_dim, m.sys_dim);
  State v(static_cast<size_t>(m.full_dim));
  for (std::int64_t j = 0; j < m.sys_dim; ++j) {
    std::fill(v.begin(), v.end(), Complex(0, 0));
    v[static_cast<size_t>(j)] = 1.0;  // ancillas all zero, system = j
    apply(v);
    for (std::int64_t i = 0; i < m.sys_dim; ++i) block(i, j) = v[static_cast<size_t>(i)];
  }
  return block;
}

Complex inner(const State& a, const State& b) {
  Complex s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_of(const State& a) { return std::sqrt(std::abs(inner(a, a))); }

CheckResult finish(double dev, double tol) {
  CheckResult r;
  r.max_deviation = dev;
  r.tolerance = tol;
  r.pass = dev <= tol;
  return r;
}

// Largest-magnitude entry of `ref`, used to fix the global phase gauge.
std::pair<Eigen::Index, Eigen::Index> pivot_of(const Mat& ref) {
  Eigen::Index pi = 0, pj = 0;
  ref.cwiseAbs().maxCoeff(&pi, &pj);
  return {pi, pj};
}

}  // namespace

CheckResult verify_block_encoding(const LcuPlan& plan, double tol) {
  const WalkModel m = build_walk_model(plan);
  const Mat block = vacuum_block(m, [&](State& v) { apply_encoding_unitary(v, m); });
  const Mat a = encoded_operator(plan);
  return finish((block - a).cwiseAbs().maxCoeff(), tol);
}

CheckResult verify_walk_power_blocks(const LcuPlan& plan, int k_max, double tol) {
  const WalkModel m = build_walk_model(plan);
  const Mat a = encoded_operator(plan);
  // Chebyshev ladder T_0 = I, T_1 = A, T_{k+1} = 2 A T_k - T_{k-1}.
  Mat t_prev = Mat::Identity(m.sys_dim, m.sys_dim);
  Mat t_cur = a;
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const Mat block = vacuum_block(m, [&](State& v) {
      for (int i = 0; i < k; ++i) apply_circuit_dense(v, m.walk, m.lay);
    });
    worst = std::max(worst, (block - t_cur).cwiseAbs().maxCoeff());
    const Mat t_next = 2.0 * a * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return finish(worst, tol);
}

CheckResult verify_walk_eigenphases(const LcuPlan& plan, double tol) {
  const WalkModel m = build_walk_model(plan);
  const Mat a = encoded_operator(plan);
  Eigen::SelfAdjointEigenSolver<Mat> eig(a);
  double worst = 0.0;
  for (std::int64_t idx = 0; idx < m.sys_dim; ++idx) {
    const double lambda = eig.eigenvalues()(idx);
    State g(static_cast<size_t>(m.full_dim), Complex(0, 0));
    for (std::int64_t i = 0; i < m.sys_dim; ++i)
      g[static_cast<size_t>(i)] = eig.eigenvectors()(i, idx);

    State wg = g;
    apply_circuit_dense(wg, m.walk, m.lay);

    const double s2 = std::max(0.0, 1.0 - lambda * lambda);
    if (s2 < 1e-16) {
      // Degenerate invariant plane: |G> itself is a +-lambda eigenvector.
      State diff = wg;
      for (size_t i = 0; i < diff.size(); ++i) diff[i] -= lambda * g[i];
      worst = std::max(worst, norm_of(diff));
      continue;
    }
    const double s = std::sqrt(s2);

    // |G_perp> = (lambda |G> - U |G>) / s completes the invariant plane.
    State ug = g;
    apply_encoding_unitary(ug, m);
    State gp(static_cast<size_t>(m.full_dim));
    for (size_t i = 0; i < gp.size(); ++i) gp[i] = (lambda * g[i] - ug[i]) / s;

    State wgp = gp;
    apply_circuit_dense(wgp, m.walk, m.lay);

    const Complex m00 = inner(g, wg), m01 = inner(g, wgp);
    const Complex m10 = inner(gp, wg), m11 = inner(gp, wgp);

    // Closure of the plane under the walk.
    State res = wg;
    for (size_t i = 0; i < res.size(); ++i) res[i] -= m00 * g[i] + m10 * gp[i];
    worst = std::max(worst, norm_of(res));

    // Eigenphases of the restricted 2x2 must be +-arccos(lambda).
    const Complex half_tr = 0.5 * (m00 + m11);
    const Complex det = m00 * m11 - m01 * m10;
    const Complex disc = std::sqrt(half_tr * half_tr - det);
    const double theta = std::acos(std::clamp(lambda, -1.0, 1.0));
    const double p1 = std::arg(half_tr + disc);
    const double p2 = std::arg(half_tr - disc);
    const double dev =
        std::min(std::max(std::abs(p1 - theta), std::abs(p2 + theta)),
                 std::max(std::abs(p1 + theta), std::abs(p2 - theta)));
    worst = std::max(worst, dev);
  }
  return finish(worst, tol);
}

CheckResult verify_reflection_identity(const LcuPlan& plan, double tol) {
  const WalkModel m = build_walk_model(plan);

  CircuitIR seq = m.prep;
  seq.append(m.ubar);
  seq.append(compile_state_prep_tilde(plan));
  const Mat lhs = dense_matrix(seq, m.lay);

  const Mat m_prep = dense_matrix(m.prep, m.lay);
  const Mat m_ubar = dense_matrix(m.ubar, m.lay);
  const Mat u = m_prep.adjoint() * m_ubar * m_prep;
  Mat rhs = u;
  for (std::int64_t i = 0; i < m.full_dim; ++i)
    if ((i >> m.lay.n_system) == 0) rhs.row(i) = -u.row(i);  // 1 - 2 Pi_0 applied left

  // Compare up to a global phase, gauged at the largest reference entry.
  const auto [pi, pj] = pivot_of(rhs);
  Complex phase(1.0, 0.0);
  if (std::abs(rhs(pi, pj)) > 1e-12) {
    phase = lhs(pi, pj) / rhs(pi, pj);
    const double mag = std::abs(phase);
    if (mag > 1e-12) phase /= mag;
  }
  return finish((lhs - phase * rhs).cwiseAbs().maxCoeff(), tol);
}

CheckResult verify_qsp_end_to_end(const LcuPlan& plan, const QspSequence& seq,
                                  double tol) {
  const WalkModel m = build_walk_model(plan);
  // Exit atom rides above the walk's qubits; conditioning is applied at the
  // stage level by running the walk on the exit-excited half of the state.
  const int exit_qubit = m.lay.total_qubits;
  if (exit_qubit + 1 > 14) throw InputError("dense model limited to 14 qubits");
  const std::int64_t half = m.full_dim;
  const std::int64_t dim = half * 2;

  const Mat a = encoded_operator(plan);
  Eigen::SelfAdjointEigenSolver<Mat> eig(a);

  double worst = 0.0;
  State v(static_cast<size_t>(dim));
  State upper(static_cast<size_t>(half));
  for (std::int64_t idx = 0; idx < m.sys_dim; ++idx) {
    // The encoded operator is a contraction; eigensolve roundoff can still
    // land a hair outside [-1, 1], which the scalar model's domain rejects.
    const double lambda = std::clamp(eig.eigenvalues()(idx), -1.0, 1.0);

    std::fill(v.begin(), v.end(), Complex(0, 0));
    for (std::int64_t i = 0; i < m.sys_dim; ++i)
      v[static_cast<size_t>(half + i)] = eig.eigenvectors()(i, idx);

    kernels::apply_rotation(v, exit_qubit, 'z', -seq.phases[0]);
    for (size_t p = 1; p < seq.phases.size(); ++p) {
      std::copy(v.begin() + half, v.end(), upper.begin());
      apply_circuit_dense(upper, m.walk, m.lay);
      std::copy(upper.begin(), upper.end(), v.begin() + half);
      kernels::apply_rotation(v, exit_qubit, 'x', -seq.phases[p]);
    }

    Complex element = 0.0;
    for (std::int64_t i = 0; i < m.sys_dim; ++i)
      element += std::conj(eig.eigenvectors()(i, idx)) * v[static_cast<size_t>(half + i)];

    worst = std::max(worst, std::abs(element - walk_element_model(seq, lambda)));
  }
  return finish(worst, tol);
}

namespace {

// Dense matrix of the terms fully supported on the site window [lo, hi).
Mat window_matrix(const Hamiltonian& ham, int lo, int hi) {
  const std::int64_t dim = std::int64_t{1} << (hi - lo);
  Mat h = Mat::Zero(dim, dim);
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& term : ham.terms) {
    bool inside = true;
    for (size_t s = 0; s < term.pauli.size(); ++s)
      if (term.pauli[s] != 'I' &&
          (static_cast<int>(s) < lo || static_cast<int>(s) >= hi)) {
        inside = false;
        break;
      }
    if (!inside || term.coeff == 0.0) continue;
    const auto masks =
        compile_pauli(term.pauli.substr(static_cast<size_t>(lo),
                                        static_cast<size_t>(hi - lo)));
    for (std::int64_t j = 0; j < dim; ++j) {
      Complex ph = kIPow[masks.y_count & 3];
      if (__builtin_popcountll(static_cast<std::uint64_t>(j) & masks.z_mask) & 1)
        ph = -ph;
      h(static_cast<std::int64_t>(static_cast<std::uint64_t>(j) ^ masks.x_mask), j) +=
          term.coeff * ph;
    }
  }
  return h;
}

Mat identity_of(int qubits) {
  return Mat::Identity(std::int64_t{1} << qubits, std::int64_t{1} << qubits);
}

}  // namespace

std::vector<double> lr_decimation_errors(const Hamiltonian& ham, double t,
                                         const std::vector<int>& buffer_sizes) {
  ham.validate();
  const int n = ham.n_sites;
  if (n > 12) throw InputError("decimation check limited to 12 sites");
  if (!std::isfinite(t)) throw InputError("evolution time must be finite");

  const Complex mit(0.0, -t);
  const Mat u_exact = expm(mit * window_matrix(ham, 0, n));

  std::vector<double> errors;
  errors.reserve(buffer_sizes.size());
  for (int l : buffer_sizes) {
    const int a = (n - l) / 2;
    if (l < 1 || a < 1 || a + l >= n)
      throw InputError("buffer of " + std::to_string(l) +
                       " sites leaves no outer blocks on " + std::to_string(n) +
                       " sites");
    const int c = n - a - l;
    const Mat u_ab = kron(identity_of(c), expm(mit * window_matrix(ham, 0, a + l)));
    const Mat u_b = kron(identity_of(c), kron(expm(-mit * window_matrix(ham, a, a + l)),
                                              identity_of(a)));
    const Mat u_bc = kron(expm(mit * window_matrix(ham, a, n)), identity_of(a));
    const Mat decimated = u_ab * (u_b * u_bc);
    errors.push_back(spectral_norm(u_exact - decimated));
  }
  return errors;
}

double lr_decimation_error(const Hamiltonian& ham, double t, int buffer_sites) {
  return lr_decimation_errors(ham, t, {buffer_sites})[0];
}

}  // namespace rqsp
