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
#include <vector>

namespace rqsp {

// k-level coefficient tree behind hierarchical state preparation. Level j has
// branching[j] children per node; a leaf is addressed by a path
// (l_0, ..., l_{k-1}) with l_j < branching[j]. The tree stores the leaf
// probabilities (normalized Hamiltonian weights, padded with zeros up to the
// leaf count); every internal node's probability is the sum over its subtree.
class CoefficientTree {
 public:
  CoefficientTree() = default;

  // Leaf probabilities are laid out in row-major path order (last index
  // fastest). Throws InputError unless they are non-negative and sum to 1
  // within 1e-9, or the shape does not match.
  CoefficientTree(std::vector<int> branching, std::vector<double> leaf_probs);

  // Packs weights into a tree of the given shape in the order given (callers
  // sort beforehand if they want the heavy-terms-first layout), padding the
  // remaining leaves with zeros.
  static CoefficientTree pack(const std::vector<int>& branching,
                              const std::vector<double>& weights);

  int levels() const { return static_cast<int>(branching_.size()); }
  const std::vector<int>& branching() const { return branching_; }
  std::int64_t leaf_count() const;

  // Probability mass of the node addressed by `path` (any length from 0 =
  // root, probability 1, to levels() = a single leaf).
  double node_prob(const std::vector<int>& path) const;

  double leaf_prob(std::int64_t leaf_index) const { return leaf_probs_[leaf_index]; }

  // Flat index of the leaf at a full-length path.
  std::int64_t leaf_index(const std::vector<int>& path) const;

  // Conditional amplitudes of the children of `path` (length < levels()):
  // sqrt(P(child) / P(path)), all zeros when P(path) = 0. Size equals
  // branching()[path.size()].
  std::vector<double> child_amplitudes(const std::vector<int>& path) const;

 private:
  std::vector<int> branching_;
  std::vector<double> leaf_probs_;
  // level_sums_[j] holds the probabilities of all level-j nodes (level 0 is
  // the root), each level in row-major path order.
  std::vector<std::vector<double>> level_sums_;

  void build_levels();
};

}  // namespace rqsp
