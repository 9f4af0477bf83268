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

#ifndef GENCONF_CONFIGURATION_H_
#define GENCONF_CONFIGURATION_H_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "genconf/gaussian_rational.h"
#include "genconf/matrix.h"
#include "genconf/permutation.h"

namespace genconf {

enum class Space { kProjective, kAffine };

std::string SpaceName(Space s);
Space ParseSpace(const std::string& name);

// n points of CP^m (or C^m), each stored as a homogeneous row of length
// m+1. Points are numbered 1..n.
//
// Affine rows carry last coordinate exactly 1. Projective rows are only
// required to be nonzero; two projective configurations are the same point
// set when ProjectivelyEqual holds, which is weaker than operator==.
class Configuration {
 public:
  // Throws InvalidConfiguration on shape errors, a zero projective row, or
  // an affine row whose last coordinate is not 1.
  Configuration(int m, Space space, std::vector<std::vector<GaussianRational>> rows);

  int m() const { return m_; }
  int n() const { return static_cast<int>(rows_.size()); }
  Space space() const { return space_; }
  // 1-based.
  std::span<const GaussianRational> point(int i) const { return rows_.at(i - 1); }
  const std::vector<std::vector<GaussianRational>>& rows() const { return rows_; }

  // Same rows, tagged projective. Affine rows are already homogeneous.
  Configuration AsProjective() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int m_;
  Space space_;
  std::vector<std::vector<GaussianRational>> rows_;
};

// Row-wise equality up to a nonzero scalar per row (and equal m, n).
bool ProjectivelyEqual(const Configuration& a, const Configuration& b);

// Element of PGL(m+1); stored as an invertible (m+1)x(m+1) matrix acting on
// column vectors. Equality of transforms is up to a nonzero scalar.
class ProjectiveTransform {
 public:
  // Throws InvalidTransform unless square with nonzero determinant.
  explicit ProjectiveTransform(Matrix matrix);

  static ProjectiveTransform Identity(int m);
  // Entries are Gaussian integers with parts uniform in [-bound, bound];
  // resampled until invertible.
  static ProjectiveTransform Random(int m, std::mt19937_64& rng, int bound = 10);

  int m() const { return static_cast<int>(matrix_.rows()) - 1; }
  const Matrix& matrix() const { return matrix_; }

  // Uses the adjugate, which is the inverse up to the scalar det.
  ProjectiveTransform Inverse() const;
  ProjectiveTransform operator*(const ProjectiveTransform& o) const;

 private:
  Matrix matrix_;
};

bool ProjectivelyEqual(const ProjectiveTransform& a, const ProjectiveTransform& b);

// d_{idx}(q): determinant of the rows idx[0], ..., idx[m] in that order.
// Throws InvalidMultiindex on a wrong length, duplicate or out-of-range index.
GaussianRational Minor(const Configuration& config, std::span<const int> idx);

// True iff every maximal minor is nonzero.
bool IsGeneric(const Configuration& config);

// Rejection-samples a generic configuration; entries are Gaussian integers
// with real and imaginary parts uniform in [-10n, 10n]. Deterministic in
// the seed. Throws SamplingExhausted after max_rounds failures and
// InvalidConfiguration when n < m + 3.
Configuration SampleGeneric(int m, int n, Space space, std::uint64_t seed,
                            int max_rounds = 1000);

// Row i of the result is row sigma^{-1}(i) of the input.
Configuration ActPermutation(const Permutation& sigma, const Configuration& config);

// Multiplies every row by T. Affine configurations keep their tag and are
// renormalised to last coordinate 1; if an image point lands on the
// hyperplane at infinity this throws ImageNotAffine.
Configuration ActTransform(const ProjectiveTransform& t, const Configuration& config);

// All maximal minors of a configuration, computed once. Lookups take any
// ordering of distinct indices and apply the sorting sign.
class MinorTable {
 public:
  explicit MinorTable(const Configuration& config);

  const GaussianRational& Sorted(const std::vector<int>& sorted_idx) const;
  GaussianRational operator()(std::span<const int> idx) const;
  bool AllNonzero() const;

 private:
  int m_;
  int n_;
  std::map<std::vector<int>, GaussianRational> minors_;
};

// Sign (+1/-1) of the permutation sorting idx, 0 on a repeated entry.
int SortingSign(std::span<const int> idx);

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k);

}  // namespace genconf

#endif  // GENCONF_CONFIGURATION_H_
