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

#ifndef GENCONF_DCR_H_
#define GENCONF_DCR_H_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "genconf/configuration.h"
#include "genconf/gaussian_rational.h"
#include "genconf/permutation.h"

namespace genconf {

// Determinant cross ratio
//
//   e_{i;j,k,l,s}(q) = d_{i,j,k} d_{i,l,s} / (d_{i,j,l} d_{i,k,s})
//
// where i is the essential support (m-1 indices) and d_{...} are maximal
// minors. The four Klein relabellings (j,k,l,s), (k,j,s,l), (l,s,j,k),
// (s,l,k,j) give the same function; the stored quadruple is the
// lexicographically least of them, so data equality is function equality.
class Dcr {
 public:
  int m() const { return static_cast<int>(ess_.size()) + 1; }
  const std::vector<int>& essential_support() const { return ess_; }
  const std::array<int, 4>& quad() const { return quad_; }
  // All m+3 indices, sorted.
  std::vector<int> support() const;
  int max_index() const;

  // "e[{1,2};3,4,5,6]"; the essential support prints sorted.
  std::string ToString() const;

  friend auto operator<=>(const Dcr&, const Dcr&) = default;
  friend bool operator==(const Dcr&, const Dcr&) = default;

 private:
  friend Dcr MakeDcr(std::vector<int> ess, int j, int k, int l, int s);
  Dcr(std::vector<int> ess, std::array<int, 4> quad)
      : ess_(std::move(ess)), quad_(quad) {}

  std::vector<int> ess_;
  std::array<int, 4> quad_;
};

std::ostream& operator<<(std::ostream& os, const Dcr& d);

// Throws InvalidDcr when the m+3 indices are not distinct positive ints.
Dcr MakeDcr(std::vector<int> ess, int j, int k, int l, int s);
// Inverse of Dcr::ToString. Throws ParseError.
Dcr ParseDcr(std::string_view text);

// Throws NotGeneric when one of the four minors vanishes and InvalidDcr when
// the DCR does not fit the configuration's (m, n).
GaussianRational Evaluate(const Dcr& d, const Configuration& config);
GaussianRational Evaluate(const Dcr& d, const MinorTable& minors);

// 1/e: e_{i;j,l,k,s}.
Dcr Inverse(const Dcr& d);
// 1-e: e_{i;j,s,l,k}.
Dcr OneMinus(const Dcr& d);

// sigma e_{i;j,k,l,s} = e_{sigma(i);sigma(j),sigma(k),sigma(l),sigma(s)}, so
// Evaluate(Permute(sigma, d), q) == Evaluate(d, ActPermutation(sigma^-1, q)).
Dcr Permute(const Permutation& sigma, const Dcr& d);

// Formal Laurent monomial in the sorted maximal-minor classes, with a sign.
struct SignedMonomial {
  int sign = 1;
  std::map<std::vector<int>, int> factors;

  bool is_constant() const { return factors.empty(); }
  SignedMonomial operator*(const SignedMonomial& o) const;
  SignedMonomial Inverse() const;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

// d_{i,j,k} d_{i,l,s} / (d_{i,j,l} d_{i,k,s}) as a signed monomial.
SignedMonomial FormalFraction(const Dcr& d);
// mu / nu.
SignedMonomial FormalQuotient(const Dcr& mu, const Dcr& nu);
// The DCR whose formal fraction is exactly mon, if any.
std::optional<Dcr> AsDcr(const SignedMonomial& mon);

// nu | mu: the quotient mu / nu is again a DCR. Symmetric and irreflexive.
bool Divides(const Dcr& nu, const Dcr& mu);

// The DCRs nu with nu | mu, for points 1..n, generated directly:
//  - same essential support, one quadruple index replaced by t outside
//    supp mu: e_{i;j,k,r,t}, e_{i;k,j,s,t}, e_{i;r,s,j,t}, e_{i;s,r,k,t};
//  - same support, one essential index a exchanged in place with one
//    quadruple entry, e.g. e_{J,a;j,k,r,s} -> e_{J,j;a,k,r,s}.
// Sorted and duplicate free.
std::vector<Dcr> DivisorCandidates(const Dcr& mu, int n);

// Every DCR on points 1..n for dimension m, sorted.
std::vector<Dcr> EnumerateDcrs(int m, int n);
// C(n, m-1) * (n-m+1)(n-m)(n-m-1)(n-m-2) / 4.
std::uint64_t DcrCount(int m, int n);

// d_{i,j,k} d_{i,l,s} + d_{i,j,l} d_{i,s,k} + d_{i,j,s} d_{i,k,l}; the
// three-term Pluecker relation says this is identically zero.
GaussianRational PlueckerDefect(const Configuration& config,
                                const std::vector<int>& ess, int j, int k,
                                int l, int s);

std::uint64_t Binomial(int n, int k);

}  // namespace genconf

#endif  // GENCONF_DCR_H_
