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

// OpenMP twins of the serial kernels. Loop bodies are kept structurally
// identical to the reference versions; only the iteration is parallel. Pair
// updates touch disjoint indices per iteration (each pair is owned by its
// low-bit-clear member), so no synchronization is needed.

#include <cmath>
#include <stdexcept>

#include "rqsp/kernels.hpp"

namespace rqsp::kernels {
namespace {

inline Complex pauli_phase(std::uint64_t idx, const PauliMasks& m) {
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex ph = kIPow[m.y_count & 3];
  if (__builtin_popcountll(idx & m.z_mask) & 1) ph = -ph;
  return ph;
}

inline bool bit(std::uint64_t idx, int q) { return (idx >> q) & 1u; }

using I64 = std::int64_t;

}  // namespace

namespace omp {

void apply_pauli(State& v, const PauliMasks& m) {
  const I64 n = static_cast<I64>(v.size());
  const std::uint64_t flip = m.x_mask;
  if (flip == 0) {
#pragma omp parallel for schedule(static)
    for (I64 i = 0; i < n; ++i) v[static_cast<size_t>(i)] *= pauli_phase(static_cast<std::uint64_t>(i), m);
    return;
  }
  const std::uint64_t low = flip & (~flip + 1);
#pragma omp parallel for schedule(static)
  for (I64 is = 0; is < n; ++is) {
    const std::uint64_t i = static_cast<std::uint64_t>(is);
    if (i & low) continue;
    const std::uint64_t j = i ^ flip;
    const Complex a = v[i], b = v[j];
    v[j] = pauli_phase(i, m) * a;
    v[i] = pauli_phase(j, m) * b;
  }
}

void apply_controlled_pauli(State& v, int control, const PauliMasks& m) {
  if (m.x_mask & (std::uint64_t{1} << control) || m.z_mask & (std::uint64_t{1} << control))
    throw std::logic_error("controlled pauli: control inside target support");
  const I64 n = static_cast<I64>(v.size());
  const std::uint64_t flip = m.x_mask;
  if (flip == 0) {
#pragma omp parallel for schedule(static)
    for (I64 i = 0; i < n; ++i)
      if (bit(static_cast<std::uint64_t>(i), control))
        v[static_cast<size_t>(i)] *= pauli_phase(static_cast<std::uint64_t>(i), m);
    return;
  }
  const std::uint64_t low = flip & (~flip + 1);
#pragma omp parallel for schedule(static)
  for (I64 is = 0; is < n; ++is) {
    const std::uint64_t i = static_cast<std::uint64_t>(is);
    if ((i & low) || !bit(i, control)) continue;
    const std::uint64_t j = i ^ flip;
    const Complex a = v[i], b = v[j];
    v[j] = pauli_phase(i, m) * a;
    v[i] = pauli_phase(j, m) * b;
  }
}

void apply_rotation(State& v, int qubit, char axis, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const I64 n = static_cast<I64>(v.size());
  const std::uint64_t qbit = std::uint64_t{1} << qubit;
  switch (axis) {
    case 'z': {
      const Complex e0(c, -s), e1(c, s);
#pragma omp parallel for schedule(static)
      for (I64 i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] *= (static_cast<std::uint64_t>(i) & qbit) ? e1 : e0;
      return;
    }
    case 'x': {
      const Complex off(0, -s);
#pragma omp parallel for schedule(static)
      for (I64 is = 0; is < n; ++is) {
        const std::uint64_t i = static_cast<std::uint64_t>(is);
        if (i & qbit) continue;
        const Complex a = v[i], b = v[i | qbit];
        v[i] = c * a + off * b;
        v[i | qbit] = off * a + c * b;
      }
      return;
    }
    case 'y': {
#pragma omp parallel for schedule(static)
      for (I64 is = 0; is < n; ++is) {
        const std::uint64_t i = static_cast<std::uint64_t>(is);
        if (i & qbit) continue;
        const Complex a = v[i], b = v[i | qbit];
        v[i] = c * a - s * b;
        v[i | qbit] = s * a + c * b;
      }
      return;
    }
    default:
      throw std::logic_error("apply_rotation: axis must be x, y or z");
  }
}

void apply_controlled_rotation(State& v, int control, int qubit, char axis,
                               double theta) {
  if (control == qubit) throw std::logic_error("controlled rotation: control == target");
  const double c = std::cos(theta), s = std::sin(theta);
  const I64 n = static_cast<I64>(v.size());
  const std::uint64_t qbit = std::uint64_t{1} << qubit;
#pragma omp parallel for schedule(static)
  for (I64 is = 0; is < n; ++is) {
    const std::uint64_t i = static_cast<std::uint64_t>(is);
    if (!bit(i, control)) continue;
    if (axis == 'z') {
      v[i] *= (i & qbit) ? Complex(c, s) : Complex(c, -s);
      continue;
    }
    if (i & qbit) continue;
    const Complex a = v[i], b = v[i | qbit];
    if (axis == 'x') {
      const Complex off(0, -s);
      v[i] = c * a + off * b;
      v[i | qbit] = off * a + c * b;
    } else {
      v[i] = c * a - s * b;
      v[i | qbit] = s * a + c * b;
    }
  }
}

void apply_ohe_rotation(State& v, const std::vector<int>& reg_qubits,
                        const std::vector<double>& amps, bool dagger, int control) {
  if (reg_qubits.size() != amps.size())
    throw std::logic_error("ohe rotation: register/amplitude size mismatch");
  double s2 = 0.0;
  for (double a : amps) s2 += a * a;
  if (s2 < 1e-30) return;
  if (std::abs(s2 - 1.0) > 1e-9)
    throw std::invalid_argument("ohe rotation: amplitudes not normalized");
  const int r = static_cast<int>(reg_qubits.size());
  std::uint64_t reg_mask = 0;
  for (int q : reg_qubits) reg_mask |= std::uint64_t{1} << q;
  const std::uint64_t ctrl_mask = control >= 0 ? (std::uint64_t{1} << control) : 0;
  const I64 n = static_cast<I64>(v.size());
#pragma omp parallel for schedule(static)
  for (I64 bs = 0; bs < n; ++bs) {
    const std::uint64_t base = static_cast<std::uint64_t>(bs);
    if (base & reg_mask) continue;
    if (ctrl_mask && !(base & ctrl_mask)) continue;
    const Complex c0 = v[base];
    Complex ohe(0, 0);
    for (int i = 0; i < r; ++i)
      ohe += amps[static_cast<size_t>(i)] *
             v[base | (std::uint64_t{1} << reg_qubits[static_cast<size_t>(i)])];
    const Complex new_c0 = dagger ? ohe : -ohe;
    const Complex delta = (dagger ? -c0 : c0) - ohe;
    v[base] = new_c0;
    for (int i = 0; i < r; ++i)
      v[base | (std::uint64_t{1} << reg_qubits[static_cast<size_t>(i)])] +=
          amps[static_cast<size_t>(i)] * delta;
  }
}

void apply_zero_sector_flip(State& v, const std::vector<int>& reg_qubits, int control) {
  std::uint64_t reg_mask = 0;
  for (int q : reg_qubits) reg_mask |= std::uint64_t{1} << q;
  const std::uint64_t ctrl_mask = control >= 0 ? (std::uint64_t{1} << control) : 0;
  const I64 n = static_cast<I64>(v.size());
#pragma omp parallel for schedule(static)
  for (I64 i = 0; i < n; ++i) {
    const std::uint64_t u = static_cast<std::uint64_t>(i);
    if (u & reg_mask) continue;
    if (ctrl_mask && !(u & ctrl_mask)) continue;
    v[u] = -v[u];
  }
}

void apply_phase_flip(State& v, int control) {
  const I64 n = static_cast<I64>(v.size());
  if (control < 0) {
#pragma omp parallel for schedule(static)
    for (I64 i = 0; i < n; ++i) v[static_cast<size_t>(i)] = -v[static_cast<size_t>(i)];
    return;
  }
  const std::uint64_t ctrl_mask = std::uint64_t{1} << control;
#pragma omp parallel for schedule(static)
  for (I64 i = 0; i < n; ++i)
    if (static_cast<std::uint64_t>(i) & ctrl_mask)
      v[static_cast<size_t>(i)] = -v[static_cast<size_t>(i)];
}

}  // namespace omp
}  // namespace rqsp::kernels
