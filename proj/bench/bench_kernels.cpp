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

// Serial reference kernels vs the OpenMP variants on dense statevectors.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "rqsp/kernels.hpp"

namespace {

using rqsp::kernels::Complex;

std::vector<Complex> random_state(int qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<Complex> v(std::size_t{1} << qubits);
  double norm2 = 0.0;
  for (auto& a : v) {
    a = Complex(dist(rng), dist(rng));
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : v) a *= scale;
  return v;
}

template <typename F>
void run_rotation(benchmark::State& state, F&& apply) {
  const int qubits = static_cast<int>(state.range(0));
  auto v = random_state(qubits, 7);
  for (auto _ : state) {
    apply(v, qubits / 2, 'x', 0.3);
    benchmark::DoNotOptimize(v.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << qubits));
}

void bm_rotation_serial(benchmark::State& state) {
  run_rotation(state, [](auto& v, int q, char ax, double th) {
    rqsp::kernels::serial::apply_rotation(v, q, ax, th);
  });
}

void bm_rotation_omp(benchmark::State& state) {
  run_rotation(state, [](auto& v, int q, char ax, double th) {
    rqsp::kernels::omp::apply_rotation(v, q, ax, th);
  });
}

template <typename F>
void run_pauli(benchmark::State& state, F&& apply) {
  const int qubits = static_cast<int>(state.range(0));
  auto v = random_state(qubits, 11);
  const rqsp::PauliMasks masks =
      rqsp::compile_pauli(std::string(static_cast<std::size_t>(qubits), 'Y'), 0);
  for (auto _ : state) {
    apply(v, masks);
    benchmark::DoNotOptimize(v.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << qubits));
}

void bm_pauli_serial(benchmark::State& state) {
  run_pauli(state, [](auto& v, const rqsp::PauliMasks& m) {
    rqsp::kernels::serial::apply_pauli(v, m);
  });
}

void bm_pauli_omp(benchmark::State& state) {
  run_pauli(state, [](auto& v, const rqsp::PauliMasks& m) {
    rqsp::kernels::omp::apply_pauli(v, m);
  });
}

template <typename F>
void run_ohe(benchmark::State& state, F&& apply) {
  const int qubits = static_cast<int>(state.range(0));
  auto v = random_state(qubits, 13);
  std::vector<int> reg{0, 1, 2};
  std::vector<double> amps{0.6, 0.48, 0.64};  // squares sum to 1
  bool dagger = false;
  for (auto _ : state) {
    apply(v, reg, amps, dagger, -1);
    dagger = !dagger;  // keep the register in the driven subspace
    benchmark::DoNotOptimize(v.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << qubits));
}

void bm_ohe_serial(benchmark::State& state) {
  run_ohe(state, [](auto& v, const auto& reg, const auto& amps, bool dag, int ctl) {
    rqsp::kernels::serial::apply_ohe_rotation(v, reg, amps, dag, ctl);
  });
}

void bm_ohe_omp(benchmark::State& state) {
  run_ohe(state, [](auto& v, const auto& reg, const auto& amps, bool dag, int ctl) {
    rqsp::kernels::omp::apply_ohe_rotation(v, reg, amps, dag, ctl);
  });
}

}  // namespace

BENCHMARK(bm_rotation_serial)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(bm_rotation_omp)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(bm_pauli_serial)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(bm_pauli_omp)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(bm_ohe_serial)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(bm_ohe_omp)->Arg(14)->Arg(18)->Arg(22);

BENCHMARK_MAIN();
