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

#include <cmath>
#include <stdexcept>

#include "rqsp/dense_linalg.hpp"

namespace rqsp {
namespace {

using Mat = Eigen::MatrixXcd;

double one_norm(const Mat& a) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Diagonal Pade numerator coefficients b_0..b_m (denominator uses the same
// coefficients with alternating signs on odd powers).
const double kPade3[] = {120, 60, 12, 1};
const double kPade5[] = {30240, 15120, 3360, 420, 30, 1};
const double kPade7[] = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
const double kPade9[] = {17643225600, 8821612800, 2075673600, 302702400, 30270240,
                         2162160, 110880, 3960, 90, 1};
const double kPade13[] = {64764752532480000, 32382376266240000, 7771770303897600,
                          1187353796428800, 129060195264000, 10559470521600,
                          670442572800, 33522128640, 1323241920, 40840800, 960960,
                          16380, 182, 1};

// Evaluates U (odd part) and V (even part) of the order-m approximant, then
// solves (V - U) X = (V + U).
Mat pade_solve(const Mat& a, const double* b, int m) {
  const Eigen::Index n = a.rows();
  const Mat a2 = a * a;
  Mat u = Mat::Zero(n, n), v = Mat::Zero(n, n);
  if (m <= 9) {
    Mat pow = Mat::Identity(n, n);  // a^(2j)
    for (int j = 0; 2 * j <= m; ++j) {
      v += b[2 * j] * pow;
      if (2 * j + 1 <= m) u += b[2 * j + 1] * pow;
      if (2 * (j + 1) <= m) pow = pow * a2;
    }
    u = a * u;
  } else {
    // order 13: split as in the classic scaling-and-squaring evaluation to
    // keep the multiplication count low
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
             b[3] * a2 + b[1] * Mat::Identity(n, n));
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
        b[0] * Mat::Identity(n, n);
  }
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::logic_error("expm: square matrix required");
  const double norm = one_norm(a);
  // Ladder thresholds for orders 3, 5, 7, 9 (13 handles the rest after
  // scaling).
  if (norm <= 1.495585217958292e-2) return pade_solve(a, kPade3, 3);
  if (norm <= 2.539398330063230e-1) return pade_solve(a, kPade5, 5);
  if (norm <= 9.504178996162932e-1) return pade_solve(a, kPade7, 7);
  if (norm <= 2.097847961257068e0) return pade_solve(a, kPade9, 9);

  constexpr double kTheta13 = 5.371920351148152;
  int squarings = 0;
  Mat scaled = a;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    scaled = a / std::pow(2.0, squarings);
  }
  Mat e = pade_solve(scaled, kPade13, 13);
  for (int i = 0; i < squarings; ++i) e = e * e;
  return e;
}

double spectral_norm(const Eigen::MatrixXcd& a, double rel_tol, int max_iter) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  // Power iteration on A^dag A with a deterministic, decaying start vector.
  Eigen::VectorXcd v(a.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    v(i) = std::complex<double>(1.0 / std::sqrt(static_cast<double>(i + 1)),
                                i % 2 == 0 ? 0.25 : -0.125);
  v.normalize();
  double prev = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = a * v;
    const double norm_w = w.norm();
    if (norm_w == 0.0) return 0.0;
    v = a.adjoint() * w;
    const double norm_v = v.norm();
    if (norm_v == 0.0) return norm_w;
    v /= norm_v;
    const double sigma = std::sqrt(norm_v);  // ||A^dag A v|| -> sigma^2
    if (it > 2 && std::abs(sigma - prev) <= rel_tol * std::max(sigma, 1e-300)) return sigma;
    prev = sigma;
  }
  return prev;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right) {
  Eigen::MatrixXcd out(left.rows() * right.rows(), left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i)
    for (Eigen::Index j = 0; j < left.cols(); ++j)
      out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) =
          left(i, j) * right;
  return out;
}

}  // namespace rqsp
