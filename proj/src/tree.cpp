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

#include "rqsp/tree.hpp"

#include <cmath>
#include <numeric>

#include "rqsp/util.hpp"

namespace rqsp {

CoefficientTree::CoefficientTree(std::vector<int> branching,
                                 std::vector<double> leaf_probs)
    : branching_(std::move(branching)), leaf_probs_(std::move(leaf_probs)) {
  if (branching_.empty()) throw InputError("coefficient tree needs at least one level");
  std::int64_t leaves = 1;
  for (int b : branching_) {
    if (b < 1) throw InputError("branching factors must be >= 1");
    if (leaves > (std::int64_t{1} << 40) / b)
      throw InputError("coefficient tree too large");
    leaves *= b;
  }
  if (static_cast<std::int64_t>(leaf_probs_.size()) != leaves)
    throw InputError("leaf probability count " + std::to_string(leaf_probs_.size()) +
                     " does not match tree shape (" + std::to_string(leaves) + ")");
  double sum = 0.0;
  for (double p : leaf_probs_) {
    if (!(p >= 0.0)) throw InputError("leaf probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InputError("leaf probabilities sum to " + format_double(sum) + ", expected 1");
  build_levels();
}

CoefficientTree CoefficientTree::pack(const std::vector<int>& branching,
                                      const std::vector<double>& weights) {
  std::int64_t leaves = 1;
  for (int b : branching) {
    if (b < 1) throw InputError("branching factors must be >= 1");
    leaves *= b;
  }
  if (static_cast<std::int64_t>(weights.size()) > leaves)
    throw InputError("tree with " + std::to_string(leaves) + " leaves cannot hold " +
                     std::to_string(weights.size()) + " weights");
  std::vector<double> probs(static_cast<size_t>(leaves), 0.0);
  std::copy(weights.begin(), weights.end(), probs.begin());
  return CoefficientTree(branching, std::move(probs));
}

std::int64_t CoefficientTree::leaf_count() const {
  return static_cast<std::int64_t>(leaf_probs_.size());
}

void CoefficientTree::build_levels() {
  const int k = levels();
  level_sums_.assign(static_cast<size_t>(k) + 1, {});
  level_sums_[static_cast<size_t>(k)] = leaf_probs_;
  for (int j = k - 1; j >= 0; --j) {
    const auto& below = level_sums_[static_cast<size_t>(j) + 1];
    const int b = branching_[static_cast<size_t>(j)];
    std::vector<double> sums(below.size() / static_cast<size_t>(b), 0.0);
    for (size_t node = 0; node < sums.size(); ++node)
      for (int c = 0; c < b; ++c)
        sums[node] += below[node * static_cast<size_t>(b) + static_cast<size_t>(c)];
    level_sums_[static_cast<size_t>(j)] = std::move(sums);
  }
}

std::int64_t CoefficientTree::leaf_index(const std::vector<int>& path) const {
  if (static_cast<int>(path.size()) != levels())
    throw std::logic_error("leaf_index: path length != levels");
  std::int64_t idx = 0;
  for (size_t j = 0; j < path.size(); ++j) {
    if (path[j] < 0 || path[j] >= branching_[j])
      throw std::logic_error("leaf_index: path component out of range");
    idx = idx * branching_[j] + path[j];
  }
  return idx;
}

double CoefficientTree::node_prob(const std::vector<int>& path) const {
  if (static_cast<int>(path.size()) > levels())
    throw std::logic_error("node_prob: path longer than tree depth");
  std::int64_t idx = 0;
  for (size_t j = 0; j < path.size(); ++j) {
    if (path[j] < 0 || path[j] >= branching_[j])
      throw std::logic_error("node_prob: path component out of range");
    idx = idx * branching_[j] + path[j];
  }
  return level_sums_[path.size()][static_cast<size_t>(idx)];
}

std::vector<double> CoefficientTree::child_amplitudes(const std::vector<int>& path) const {
  const int level = static_cast<int>(path.size());
  if (level >= levels()) throw std::logic_error("child_amplitudes: path is a leaf");
  const double parent = node_prob(path);
  const int b = branching_[static_cast<size_t>(level)];
  std::vector<double> amps(static_cast<size_t>(b), 0.0);
  if (parent <= 0.0) return amps;
  std::vector<int> child = path;
  child.push_back(0);
  for (int c = 0; c < b; ++c) {
    child.back() = c;
    amps[static_cast<size_t>(c)] = std::sqrt(node_prob(child) / parent);
  }
  return amps;
}

}  // namespace rqsp
