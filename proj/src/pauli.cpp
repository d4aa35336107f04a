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

#include "rqsp/pauli.hpp"

#include <cmath>

#include "rqsp/util.hpp"

namespace rqsp {

int PauliTerm::support() const {
  int s = 0;
  for (char c : pauli)
    if (c != 'I') ++s;
  return s;
}

PauliMasks compile_pauli(const std::string& pauli, int offset) {
  if (offset < 0 || offset + pauli.size() > 64)
    throw InputError("pauli string does not fit a 64-qubit index space");
  PauliMasks m;
  for (size_t i = 0; i < pauli.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (offset + i);
    switch (pauli[i]) {
      case 'I':
        break;
      case 'X':
        m.x_mask |= bit;
        break;
      case 'Y':
        m.x_mask |= bit;
        m.z_mask |= bit;
        ++m.y_count;
        break;
      case 'Z':
        m.z_mask |= bit;
        break;
      default:
        throw InputError("invalid Pauli character '" + std::string(1, pauli[i]) +
                         "' at position " + std::to_string(i));
    }
  }
  return m;
}

double Hamiltonian::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coeff);
  return s;
}

std::vector<double> Hamiltonian::normalized_weights() const {
  const double norm = one_norm();
  if (norm <= 0.0) throw InputError("hamiltonian has zero coefficient one-norm");
  std::vector<double> w;
  w.reserve(terms.size());
  for (const auto& t : terms) w.push_back(std::abs(t.coeff) / norm);
  return w;
}

void Hamiltonian::validate() const {
  // Planning is symbolic in the site count; only the dense simulation paths
  // impose small-size caps (and check them separately). The bound here is a
  // sanity guard against nonsense input, not a capability limit.
  if (n_sites < 1 || n_sites > 4096)
    throw InputError("n_sites must be in [1, 4096], got " + std::to_string(n_sites));
  if (terms.empty()) throw InputError("hamiltonian has no terms");
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (static_cast<int>(t.pauli.size()) != n_sites)
      throw InputError("term " + std::to_string(i) + ": pauli string length " +
                       std::to_string(t.pauli.size()) + " != n_sites " +
                       std::to_string(n_sites));
    for (size_t j = 0; j < t.pauli.size(); ++j) {
      const char c = t.pauli[j];
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw InputError("term " + std::to_string(i) + ": invalid character '" +
                         std::string(1, c) + "' at position " + std::to_string(j));
    }
    if (!std::isfinite(t.coeff))
      throw InputError("term " + std::to_string(i) + ": non-finite coefficient");
  }
}

Hamiltonian disordered_heisenberg_chain(int n_sites, std::uint64_t seed) {
  if (n_sites < 2) throw InputError("heisenberg chain needs at least 2 sites");
  Hamiltonian h;
  h.n_sites = n_sites;
  const std::string id(static_cast<size_t>(n_sites), 'I');
  for (int j = 0; j + 1 < n_sites; ++j) {
    for (char axis : {'X', 'Y', 'Z'}) {
      PauliTerm t;
      t.pauli = id;
      t.pauli[static_cast<size_t>(j)] = axis;
      t.pauli[static_cast<size_t>(j) + 1] = axis;
      t.coeff = 1.0;
      h.terms.push_back(std::move(t));
    }
  }
  std::mt19937_64 rng(seed);
  for (int j = 0; j < n_sites; ++j) {
    PauliTerm t;
    t.pauli = id;
    t.pauli[static_cast<size_t>(j)] = 'Z';
    t.coeff = uniform_sym(rng);
    h.terms.push_back(std::move(t));
  }
  return h;
}

Hamiltonian random_pauli_hamiltonian(int n_sites, int n_terms,
                                     std::uint64_t seed) {
  if (n_sites < 1) throw InputError("random hamiltonian needs at least 1 site");
  if (n_terms < 1) throw InputError("random hamiltonian needs at least 1 term");
  static constexpr char kAlphabet[] = {'I', 'X', 'Y', 'Z'};
  std::mt19937_64 rng(seed);
  Hamiltonian h;
  h.n_sites = n_sites;
  h.terms.reserve(static_cast<size_t>(n_terms));
  for (int i = 0; i < n_terms; ++i) {
    PauliTerm t;
    do {
      t.pauli.clear();
      for (int j = 0; j < n_sites; ++j)
        t.pauli.push_back(kAlphabet[rng() & 3]);
    } while (t.support() == 0);
    t.coeff = uniform_sym(rng);
    h.terms.push_back(std::move(t));
  }
  return h;
}

}  // namespace rqsp
