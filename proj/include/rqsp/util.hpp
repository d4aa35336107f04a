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
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rqsp {

// Thrown for malformed user input (bad JSON, invalid Pauli strings, out-of-range
// parameters). The CLI maps this to exit code 1; exit code 2 is reserved for
// checks that ran and failed.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic uniform double in [0, 1) from a mt19937_64 draw. We build the
// double from the top 53 bits ourselves because std::uniform_real_distribution
// is not required to produce identical streams across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [-1, 1).
inline double uniform_sym(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

// Shortest round-trippable decimal form of a double ("%.17g" trimmed by
// checking re-parse at lower precisions). Deterministic across runs; used for
// every numeric value we print or serialize.
std::string format_double(double value);

// Fixed-form helper for human-facing tables (still deterministic).
std::string format_fixed(double value, int digits);

// Least-squares fit y = a + b*x. Returns {intercept, slope}.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Minimizes a strictly unimodal function on [lo, hi] by golden-section search.
// Returns the abscissa of the minimum to tolerance `tol` (absolute, on x).
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-10);

// Finds a root of f on [lo, hi] by bisection; f(lo) and f(hi) must bracket a
// sign change. Relative tolerance on x.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double rel_tol = 1e-12, int max_iter = 200);

// Writes `content` to `path` atomically: temp file in the same directory,
// flushed and closed, then renamed over the destination.
void write_file_atomic(const std::string& path, const std::string& content);

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

// ceil(x^(1/d)) for positive integers, robust against pow() rounding such as
// pow(16, 0.5) landing a hair above 4.
int ceil_root(std::int64_t n, int d);

}  // namespace rqsp
