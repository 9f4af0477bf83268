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

#ifndef GENCONF_PERMUTATION_H_
#define GENCONF_PERMUTATION_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace genconf {

// A bijection of {1..n}, stored as its image list (1-based values).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int n);
  // The transposition (a b) on {1..n}.
  static Permutation Transposition(int n, int a, int b);
  // Uniformly random, deterministic in the generator state.
  static Permutation Random(int n, std::mt19937_64& rng);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Permutation Inverse() const;
  // (this * other)(x) = this(other(x)).
  Permutation operator*(const Permutation& other) const;

  // Adjacent transpositions (i i+1) whose product, left to right, equals
  // this permutation. Empty for the identity.
  std::vector<int> AdjacentWord() const;

  // "[2,1,3]".
  std::string ToString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// All n! permutations of {1..n} in lexicographic order of images.
std::vector<Permutation> AllPermutations(int n);

// Generators (1 2), (2 3), ..., (n-1 n) of S(n).
std::vector<Permutation> AdjacentTranspositions(int n);

std::uint64_t Factorial(int n);

}  // namespace genconf

#endif  // GENCONF_PERMUTATION_H_
