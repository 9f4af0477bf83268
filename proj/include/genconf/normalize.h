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

#ifndef GENCONF_NORMALIZE_H_
#define GENCONF_NORMALIZE_H_

#include <optional>
#include <utility>

#include "genconf/configuration.h"
#include "genconf/matrix.h"

namespace genconf {

// A generic projective configuration whose first m+1 points are the
// coordinate points v_1..v_{m+1} and whose (m+2)-nd point is w = [1:...:1].
//
// Rows are stored in a fixed representative: each row is scaled so that its
// last nonzero coordinate equals 1. In particular rows 1..m+2 are exactly
// v_1..v_{m+1}, w.
class ReducedConfiguration {
 public:
  // Throws InvalidConfiguration if config is not reduced.
  explicit ReducedConfiguration(const Configuration& config);

  const Configuration& config() const { return config_; }
  int m() const { return config_.m(); }
  int n() const { return config_.n(); }

  friend bool operator==(const ReducedConfiguration&,
                         const ReducedConfiguration&) = default;

 private:
  Configuration config_;
};

// Scales a nonzero row so that its last nonzero entry is 1.
std::vector<GaussianRational> NormalizedRow(std::span<const GaussianRational> row);

// True iff config is projective, generic and its first m+2 points are
// projectively v_1, ..., v_{m+1}, w.
bool IsReduced(const Configuration& config);

// The unique projective transform carrying q into the reduced space.
//
// With A the matrix of the first m+1 rows and D_i the determinant of A with
// row i replaced by q_{m+2}, the result is diag(prod_{k != i} D_k) adj(A^T):
// it sends q_i to a multiple of v_i and q_{m+2} to a multiple of w. The
// entries stay polynomial in the coordinates of q.
//
// Affine inputs are treated through their homogeneous rows. Throws
// NotGeneric for non-generic input and InvalidConfiguration for n < m+3.
ProjectiveTransform Gamma(const Configuration& config);

// A representative of gamma(q)^{-1}: the first m+1 points as columns,
// scaled by d(i -> m+2). Same errors as Gamma.
ProjectiveTransform GammaInverse(const Configuration& config);

// (gamma(q), gamma(q) q).
std::pair<ProjectiveTransform, ReducedConfiguration> Decompose(
    const Configuration& config);

// gamma(q) q alone, read off the maximal minors of q.
ReducedConfiguration ReducedForm(const Configuration& config);

// T^{-1} applied to the reduced configuration; projective.
Configuration Compose(const ProjectiveTransform& t,
                      const ReducedConfiguration& reduced);

// The m x (n-m-2) matrix of p_{s,t} = 1 - z_{t,m+1} / z_{t,s} for
// s = 1..m and t = m+3..n. Column c corresponds to t = m+3+c.
Matrix EmbedP(const ReducedConfiguration& reduced);

// The transform A with A q = target projectively, if one exists. Both
// configurations must be generic with equal (m, n).
std::optional<ProjectiveTransform> SolveTransform(const Configuration& q,
                                                  const Configuration& target);

}  // namespace genconf

#endif  // GENCONF_NORMALIZE_H_
