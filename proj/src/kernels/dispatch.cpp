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

#include <atomic>

#include "rqsp/kernels.hpp"

#ifdef RQSP_HAVE_OPENMP
#include <omp.h>
#endif

namespace rqsp::kernels {
namespace {

std::atomic<int> g_max_threads{0};  // 0: library default

// Below this size the parallel fork/join overhead dominates.
constexpr size_t kParallelThreshold = size_t{1} << 12;

bool use_omp(size_t state_size, Impl impl) {
  if (impl == Impl::Serial) return false;
#ifdef RQSP_HAVE_OPENMP
  if (impl == Impl::Omp) return true;
  const int cap = g_max_threads.load(std::memory_order_relaxed);
  if (cap == 1) return false;
  return state_size >= kParallelThreshold;
#else
  (void)state_size;
  return false;
#endif
}

struct ThreadCapGuard {
#ifdef RQSP_HAVE_OPENMP
  int saved;
  ThreadCapGuard() : saved(omp_get_max_threads()) {
    const int cap = g_max_threads.load(std::memory_order_relaxed);
    if (cap > 0) omp_set_num_threads(cap);
  }
  ~ThreadCapGuard() { omp_set_num_threads(saved); }
#endif
};

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

int max_threads() {
  const int cap = g_max_threads.load(std::memory_order_relaxed);
  if (cap > 0) return cap;
#ifdef RQSP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void apply_pauli(State& v, const PauliMasks& m, Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_pauli(v, m);
  } else {
    serial::apply_pauli(v, m);
  }
}

void apply_controlled_pauli(State& v, int control, const PauliMasks& m, Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_controlled_pauli(v, control, m);
  } else {
    serial::apply_controlled_pauli(v, control, m);
  }
}

void apply_rotation(State& v, int qubit, char axis, double theta, Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_rotation(v, qubit, axis, theta);
  } else {
    serial::apply_rotation(v, qubit, axis, theta);
  }
}

void apply_controlled_rotation(State& v, int control, int qubit, char axis, double theta,
                               Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_controlled_rotation(v, control, qubit, axis, theta);
  } else {
    serial::apply_controlled_rotation(v, control, qubit, axis, theta);
  }
}

void apply_ohe_rotation(State& v, const std::vector<int>& reg_qubits,
                        const std::vector<double>& amps, bool dagger, int control,
                        Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_ohe_rotation(v, reg_qubits, amps, dagger, control);
  } else {
    serial::apply_ohe_rotation(v, reg_qubits, amps, dagger, control);
  }
}

void apply_zero_sector_flip(State& v, const std::vector<int>& reg_qubits, int control,
                            Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_zero_sector_flip(v, reg_qubits, control);
  } else {
    serial::apply_zero_sector_flip(v, reg_qubits, control);
  }
}

void apply_phase_flip(State& v, int control, Impl impl) {
  if (use_omp(v.size(), impl)) {
    ThreadCapGuard g;
    omp::apply_phase_flip(v, control);
  } else {
    serial::apply_phase_flip(v, control);
  }
}

}  // namespace rqsp::kernels
