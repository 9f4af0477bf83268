// Copyright 2026 The Authors.
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

#include "genconf/permutation.h"

#include <algorithm>
#include <numeric>

#include "genconf/errors.h"

namespace genconf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidPermutation("images are not a permutation of 1.." +
                               std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::Transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) {
    throw InvalidPermutation("transposition index out of range");
  }
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[a - 1], img[b - 1]);
  return Permutation(std::move(img));
}

Permutation Permutation::Random(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(img[i], img[pick(rng)]);
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) {
    throw InvalidPermutation("composing permutations of different degree");
  }
  std::vector<int> img(images_.size());
  for (int i = 0; i < size(); ++i) img[i] = images_[other.images_[i] - 1];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::vector<int> Permutation::AdjacentWord() const {
  // Bubble-sort the image list; each swap of positions (i, i+1) is a
  // right multiplication by (i i+1).
  std::vector<int> img = images_;
  std::vector<int> word;
  for (int pass = 0; pass < size(); ++pass) {
    for (int i = 0; i + 1 < size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        word.push_back(i + 1);
      }
    }
  }
  // this * t_1 * ... * t_k = id, so this = t_k * ... * t_1.
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Permutation::ToString() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.ToString();
}

std::vector<Permutation> AllPermutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  out.reserve(Factorial(n));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> AdjacentTranspositions(int n) {
  std::vector<Permutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Permutation::Transposition(n, i, i + 1));
  return gens;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace genconf
