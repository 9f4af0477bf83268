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

#ifndef GENCONF_TAME_H_
#define GENCONF_TAME_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "genconf/complex.h"
#include "genconf/configuration.h"
#include "genconf/dcr.h"
#include "genconf/matrix.h"
#include "genconf/permutation.h"

namespace genconf {

// Anything that maps configurations to configurations. The recovery code
// only ever sees maps through this interface.
using ConfigMap = std::function<Configuration(const Configuration&)>;

// tau(q) = sum_p u(q)^p * coefficients[p], where
// u(q) = sum over the S(n)-orbit O of orbit_dcr of e(q)^2.
// Since theta permutes O, u(theta q) = u(q) for every permutation theta.
// (The plain sum of e over O is useless: e and 1-e both lie in O.)
struct ParametricTau {
  Dcr orbit_dcr;
  std::vector<Matrix> coefficients;
};

// f(q) = sigma tau(q) q with tau S(n)-invariant.
//
// When tau is applied to an affine configuration whose image leaves C^m the
// evaluation throws ImageNotAffine; such a map is not quasitame.
class TameMap {
 public:
  TameMap(Permutation sigma, ProjectiveTransform constant_tau);
  TameMap(Permutation sigma, ParametricTau parametric_tau);

  const Permutation& sigma() const { return sigma_; }
  int n() const { return sigma_.size(); }
  int m() const;
  bool is_constant() const {
    return std::holds_alternative<ProjectiveTransform>(tau_);
  }
  const std::variant<ProjectiveTransform, ParametricTau>& tau() const {
    return tau_;
  }

  // The orbit parameter u(q); zero for constant tau.
  GaussianRational Parameter(const Configuration& q) const;
  // Throws NotGeneric when the template is singular at u(q).
  ProjectiveTransform TauAt(const Configuration& q) const;

 private:
  Permutation sigma_;
  std::variant<ProjectiveTransform, ParametricTau> tau_;
  std::vector<Dcr> orbit_;
};

// sigma (tau(q) q).
Configuration EvalMap(const TameMap& f, const Configuration& q);
ConfigMap AsConfigMap(const TameMap& f);

// A random tame map for (m, n): uniform sigma, and tau either a random
// constant transform or a random linear template A_0 + u A_1.
TameMap RandomTameMap(int m, int n, bool parametric, std::uint64_t seed);

// The S(n)-orbit of d on points 1..n, sorted.
std::vector<Dcr> DcrOrbit(const Dcr& d, int n);

// f*(d) = d o f. For a tame map this is Permute(sigma^{-1}, d) since DCRs
// are projectively invariant; the symbolic answer is checked against
// Evaluate(d, f(q)) on three sampled configurations and
// InducedMapInconsistent is thrown on mismatch.
Dcr InducedMap(const TameMap& f, const Dcr& d, Space space = Space::kProjective,
               std::uint64_t seed = 0);
// The same for many DCRs, sharing the sampled configurations.
std::vector<Dcr> InducedMap(const TameMap& f, const std::vector<Dcr>& ds,
                            Space space = Space::kProjective,
                            std::uint64_t seed = 0);

// The vertex map d -> d o f of a black-box map, identified numerically:
// every DCR is evaluated at sampled configurations q_k and at f(q_k), and
// d o f is the unique DCR with matching values. Three samples are used,
// escalating to six when two DCRs share a value tuple or a lookup fails.
class BlackBoxInducedMap {
 public:
  // Throws InducedMapInconsistent when identification fails at six samples.
  BlackBoxInducedMap(const ConfigMap& f, int m, int n, Space space,
                     std::uint64_t seed);

  const std::vector<Dcr>& vertices() const { return vertices_; }
  // images()[v] is the index of vertices()[v] o f.
  const std::vector<int>& images() const { return images_; }
  int samples_used() const { return samples_used_; }
  Dcr operator()(const Dcr& d) const;
  bool IsBijective() const;

 private:
  std::vector<Dcr> vertices_;
  std::vector<int> images_;
  int samples_used_ = 0;
};

// A permutation rho with (rho f)^* fixing e_{(1..m minus r);r,m+1,m+2,s} for
// r = 1..m, s = m+3..n. Needs m > 1, n >= m+3 and n != 2m+2, otherwise
// UnsupportedCase. Throws TheoremViolation when no rho exists.
Permutation FindRho(const ConfigMap& f, int m, int n,
                    Space space = Space::kProjective, std::uint64_t seed = 0);
Permutation FindRho(const TameMap& f, Space space = Space::kProjective,
                    std::uint64_t seed = 0);

// The pair (sigma, tau) rebuilt from a black-box strictly equivariant map:
// sigma = rho^{-1} and tau(q) = gamma(rho f(q))^{-1} gamma(q).
class RecoveredMap {
 public:
  RecoveredMap(ConfigMap f, Permutation rho);

  const Permutation& sigma() const { return sigma_; }
  const Permutation& rho() const { return rho_; }
  ProjectiveTransform TauAt(const Configuration& q) const;
  // sigma (tau(q) q).
  Configuration operator()(const Configuration& q) const;

 private:
  ConfigMap f_;
  Permutation rho_;
  Permutation sigma_;
};

RecoveredMap Recover(const ConfigMap& f, int m, int n,
                     Space space = Space::kProjective, std::uint64_t seed = 0);

struct EquivarianceReport {
  bool holds = false;
  // alpha on the generators (1 2), ..., (n-1 n), when determined.
  std::vector<Permutation> alpha_on_generators;
  std::string witness;

  // alpha extended multiplicatively along an adjacent-transposition word.
  Permutation Alpha(const Permutation& theta) const;
};

// Checks f(theta q) = alpha(theta) f(q) on `samples` sampled configurations,
// for every adjacent transposition theta and a few random theta, reading
// alpha off the first sample.
EquivarianceReport CheckStrictEquivariance(const ConfigMap& f, int m, int n,
                                           Space space, int samples,
                                           std::uint64_t seed);

}  // namespace genconf

#endif  // GENCONF_TAME_H_
