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
#include <string>
#include <vector>

namespace rqsp {

// One term of a Pauli-sum Hamiltonian. `pauli` is a string over {I,X,Y,Z};
// character position 0 addresses site 0, which is the least significant qubit
// of any statevector index.
struct PauliTerm {
  std::string pauli;
  double coeff = 0.0;

  int support() const;  // number of non-identity sites
};

// Bitmask form of a Pauli string, offset into a wider qubit space.
// x_mask carries X and Y sites, z_mask carries Z and Y sites.
struct PauliMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int y_count = 0;
};

// Compiles `pauli` with its site 0 placed at qubit `offset`.
// Throws InputError on characters outside {I,X,Y,Z}.
PauliMasks compile_pauli(const std::string& pauli, int offset = 0);

struct Hamiltonian {
  int n_sites = 0;
  std::vector<PauliTerm> terms;

  // Sum of |coeff| over all terms.
  double one_norm() const;

  // |coeff_i| / one_norm for every term, in term order.
  std::vector<double> normalized_weights() const;

  // Structural validation with position-precise diagnostics: every term's
  // string must have length n_sites and only {I,X,Y,Z}; coefficients must be
  // finite; n_sites must be in [1, 64]. Throws InputError.
  void validate() const;
};

// Disordered Heisenberg chain on n sites: for every bond (j, j+1) the three
// couplings XX, YY, ZZ with coefficient 1, plus a longitudinal field h_j Z_j
// per site with h_j drawn uniformly from [-1, 1) by a seeded mt19937_64.
// Term order: all bonds left to right (X, Y, Z per bond), then the n fields.
// Field coefficients are stored as drawn; weighting uses |h_j|.
Hamiltonian disordered_heisenberg_chain(int n_sites, std::uint64_t seed);

// Random Pauli-sum instance for verification runs: n_terms strings over
// {I,X,Y,Z}^n_sites, each resampled until it is not the identity, with
// coefficients drawn uniformly from [-1, 1). Deterministic in the seed.
Hamiltonian random_pauli_hamiltonian(int n_sites, int n_terms,
                                     std::uint64_t seed);

}  // namespace rqsp
