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

// Statevector gate-application kernels. Each operation exists twice, in
// namespaces kernels::serial (reference implementation, no threading) and
// kernels::omp (OpenMP-parallel loops). The top-level rqsp::kernels functions
// dispatch at runtime: serial when the vector is small or the build lacks
// OpenMP, parallel otherwise. Tests drive both implementations against each
// other on random states.

#include <complex>
#include <cstdint>
#include <vector>

#include "rqsp/pauli.hpp"

namespace rqsp::kernels {

using Complex = std::complex<double>;
using State = std::vector<Complex>;

enum class Impl { Auto, Serial, Omp };

// Process-wide default used by Impl::Auto. Set from the RQSP_THREADS
// environment variable by the CLI; 1 forces serial.
void set_max_threads(int n);
int max_threads();

// v <- P v for the Pauli operator described by `m` (already offset into the
// full qubit space).
void apply_pauli(State& v, const PauliMasks& m, Impl impl = Impl::Auto);

// v <- (|1><1|_c pauli + |0><0|_c I) v, controlled on qubit `control`.
// `control` must not intersect the Pauli's support.
void apply_controlled_pauli(State& v, int control, const PauliMasks& m,
                            Impl impl = Impl::Auto);

// Single-qubit rotation exp(-i theta sigma_axis) on `qubit`; axis in {x,y,z}.
void apply_rotation(State& v, int qubit, char axis, double theta, Impl impl = Impl::Auto);

// Same rotation applied only where `control` is 1.
void apply_controlled_rotation(State& v, int control, int qubit, char axis, double theta,
                               Impl impl = Impl::Auto);

// One-hot-encoding rotation on a register of `reg_qubits.size()` atoms located
// at the given qubit indices. With amplitudes a_i (real, sum of squares 1) and
// |ohe_i> the basis state exciting atom i only, the map is
//   |0...0>  ->  sum_i a_i |ohe_i>,      sum_i a_i |ohe_i>  ->  -|0...0>,
// identity on the orthogonal complement. `dagger` applies the inverse.
// An optional control qubit (-1 for none) restricts the action to its
// excited half.
void apply_ohe_rotation(State& v, const std::vector<int>& reg_qubits,
                        const std::vector<double>& amps, bool dagger = false,
                        int control = -1, Impl impl = Impl::Auto);

// Sign flip of every component whose `reg_qubits` are all 0 (a reflection
// about the register's vacuum sector), optionally controlled.
void apply_zero_sector_flip(State& v, const std::vector<int>& reg_qubits,
                            int control = -1, Impl impl = Impl::Auto);

// v <- -v where `control` is 1 (or globally when control == -1).
void apply_phase_flip(State& v, int control = -1, Impl impl = Impl::Auto);

namespace serial {
void apply_pauli(State& v, const PauliMasks& m);
void apply_controlled_pauli(State& v, int control, const PauliMasks& m);
void apply_rotation(State& v, int qubit, char axis, double theta);
void apply_controlled_rotation(State& v, int control, int qubit, char axis, double theta);
void apply_ohe_rotation(State& v, const std::vector<int>& reg_qubits,
                        const std::vector<double>& amps, bool dagger, int control);
void apply_zero_sector_flip(State& v, const std::vector<int>& reg_qubits, int control);
void apply_phase_flip(State& v, int control);
}  // namespace serial

namespace omp {
void apply_pauli(State& v, const PauliMasks& m);
void apply_controlled_pauli(State& v, int control, const PauliMasks& m);
void apply_rotation(State& v, int qubit, char axis, double theta);
void apply_controlled_rotation(State& v, int control, int qubit, char axis, double theta);
void apply_ohe_rotation(State& v, const std::vector<int>& reg_qubits,
                        const std::vector<double>& amps, bool dagger, int control);
void apply_zero_sector_flip(State& v, const std::vector<int>& reg_qubits, int control);
void apply_phase_flip(State& v, int control);
}  // namespace omp

}  // namespace rqsp::kernels
