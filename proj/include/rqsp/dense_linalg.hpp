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

#include <Eigen/Dense>

namespace rqsp {

// Matrix exponential by scaling-and-squaring with diagonal Pade
// approximants of orders 3/5/7/9/13, ladder selection on the 1-norm.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

// Largest singular value by power iteration on A^dag A, deterministic start
// vector, relative tolerance on the Rayleigh quotient.
double spectral_norm(const Eigen::MatrixXcd& a, double rel_tol = 1e-10,
                     int max_iter = 500);

// Kronecker product with the convention index = i_left * cols(right) + i_right,
// i.e. the LEFT factor owns the high-order bits.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right);

}  // namespace rqsp
