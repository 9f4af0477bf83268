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

#include "genconf/tame.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "genconf/errors.h"
#include "genconf/normalize.h"

namespace genconf {
namespace {

constexpr std::uint64_t kCheckSeedOffset = 0x5eed0001;

ProjectiveTransform TemplateAt(const std::vector<Matrix>& coefficients,
                               const GaussianRational& u) {
  const Matrix& first = coefficients.front();
  Matrix acc(first.rows(), first.cols());
  // Horner from the top coefficient down.
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= u;
    for (std::size_t r = 0; r < acc.rows(); ++r) {
      for (std::size_t c = 0; c < acc.cols(); ++c) acc(r, c) += (*it)(r, c);
    }
  }
  // Projective scaling to Gaussian-integer entries keeps images small.
  mpz_class den = 1;
  for (const auto& z : acc.data()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), z.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), z.im().get_den_mpz_t());
  }
  acc *= GaussianRational(mpq_class(den));
  if (acc.Determinant().is_zero()) {
    throw NotGeneric("tau template is singular at u = " + u.ToString());
  }
  return ProjectiveTransform(std::move(acc));
}

Matrix RandomMatrix(int size, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix a(size, size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) a(r, c) = GaussianRational(dist(rng), dist(rng));
  }
  return a;
}

// For each row of `image`, the unique row of `base` it is proportional to.
std::optional<std::vector<int>> MatchRows(const Configuration& image,
                                          const Configuration& base) {
  const int n = base.n();
  std::vector<int> match(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    int found = 0;
    for (int j = 1; j <= n; ++j) {
      if (!Proportional(image.point(i), base.point(j))) continue;
      if (found != 0 || used[j]) return std::nullopt;
      found = j;
    }
    if (found == 0) return std::nullopt;
    used[found] = true;
    match[i - 1] = found;
  }
  return match;
}

// pi with image = pi . base, i.e. row i of image is row pi^{-1}(i) of base.
std::optional<Permutation> RowPermutation(const Configuration& image,
                                          const Configuration& base) {
  auto match = MatchRows(image, base);
  if (!match) return std::nullopt;
  return Permutation(*match).Inverse();
}

void CheckSize(int m, int n) {
  if (m < 1 || n < m + 3) {
    throw InvalidConfiguration("need m >= 1 and n >= m+3, got m=" +
                               std::to_string(m) + " n=" + std::to_string(n));
  }
}

}  // namespace

TameMap::TameMap(Permutation sigma, ProjectiveTransform constant_tau)
    : sigma_(std::move(sigma)), tau_(std::move(constant_tau)) {}

TameMap::TameMap(Permutation sigma, ParametricTau parametric_tau)
    : sigma_(std::move(sigma)), tau_(std::move(parametric_tau)) {
  const auto& p = std::get<ParametricTau>(tau_);
  if (p.coefficients.empty()) {
    throw InvalidTransform("parametric tau needs at least one coefficient");
  }
  const std::size_t size = p.coefficients.front().rows();
  for (const Matrix& a : p.coefficients) {
    if (!a.is_square() || a.rows() != size) {
      throw InvalidTransform("template coefficients must share a square shape");
    }
  }
  if (p.orbit_dcr.max_index() > n() ||
      p.orbit_dcr.m() != static_cast<int>(size) - 1) {
    throw InvalidDcr("orbit DCR " + p.orbit_dcr.ToString() +
                     " does not fit the map");
  }
  orbit_ = DcrOrbit(p.orbit_dcr, n());
}

int TameMap::m() const {
  return std::visit(
      [](const auto& t) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(t)>,
                                     ProjectiveTransform>) {
          return t.m();
        } else {
          return static_cast<int>(t.coefficients.front().rows()) - 1;
        }
      },
      tau_);
}

GaussianRational TameMap::Parameter(const Configuration& q) const {
  GaussianRational u;
  if (is_constant()) return u;
  const MinorTable minors(q.AsProjective());
  for (const Dcr& d : orbit_) {
    GaussianRational v = Evaluate(d, minors);
    u += v * v;
  }
  return u;
}

ProjectiveTransform TameMap::TauAt(const Configuration& q) const {
  if (const auto* t = std::get_if<ProjectiveTransform>(&tau_)) return *t;
  return TemplateAt(std::get<ParametricTau>(tau_).coefficients, Parameter(q));
}

Configuration EvalMap(const TameMap& f, const Configuration& q) {
  if (q.m() != f.m() || q.n() != f.n()) {
    throw InvalidConfiguration("map is for m=" + std::to_string(f.m()) +
                               " n=" + std::to_string(f.n()));
  }
  return ActPermutation(f.sigma(), ActTransform(f.TauAt(q), q));
}

ConfigMap AsConfigMap(const TameMap& f) {
  return [f](const Configuration& q) { return EvalMap(f, q); };
}

TameMap RandomTameMap(int m, int n, bool parametric, std::uint64_t seed) {
  CheckSize(m, n);
  std::mt19937_64 rng(seed);
  Permutation sigma = Permutation::Random(n, rng);
  if (!parametric) {
    return TameMap(std::move(sigma), ProjectiveTransform::Random(m, rng, 5));
  }
  std::vector<Dcr> all = EnumerateDcrs(m, n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  ParametricTau tau{all[pick(rng)],
                    {RandomMatrix(m + 1, rng, 5), RandomMatrix(m + 1, rng, 5)}};
  return TameMap(std::move(sigma), std::move(tau));
}

std::vector<Dcr> DcrOrbit(const Dcr& d, int n) {
  if (d.max_index() > n) {
    throw InvalidDcr(d.ToString() + " has an index above " + std::to_string(n));
  }
  std::set<Dcr> seen{d};
  std::vector<Dcr> frontier{d};
  const auto gens = AdjacentTranspositions(n);
  while (!frontier.empty()) {
    std::vector<Dcr> next;
    for (const Dcr& x : frontier) {
      for (const Permutation& g : gens) {
        Dcr y = Permute(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Dcr InducedMap(const TameMap& f, const Dcr& d, Space space,
               std::uint64_t seed) {
  return InducedMap(f, std::vector<Dcr>{d}, space, seed).front();
}

std::vector<Dcr> InducedMap(const TameMap& f, const std::vector<Dcr>& ds,
                            Space space, std::uint64_t seed) {
  const int m = f.m();
  const int n = f.n();
  for (const Dcr& d : ds) {
    if (d.m() != m || d.max_index() > n) {
      throw InvalidDcr(d.ToString() + " is not a DCR for m=" +
                       std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  std::vector<MinorTable> at_q;
  std::vector<MinorTable> at_fq;
  for (std::uint64_t k = 0; k < 3; ++k) {
    Configuration q = SampleGeneric(m, n, space, seed + kCheckSeedOffset + k);
    at_q.emplace_back(ReducedForm(q).config());
    at_fq.emplace_back(ReducedForm(EvalMap(f, q)).config());
  }
  const Permutation pullback = f.sigma().Inverse();
  std::vector<Dcr> images;
  images.reserve(ds.size());
  for (const Dcr& d : ds) {
    Dcr image = Permute(pullback, d);
    for (std::size_t k = 0; k < at_q.size(); ++k) {
      if (Evaluate(d, at_fq[k]) != Evaluate(image, at_q[k])) {
        throw InducedMapInconsistent(d.ToString() + " o f differs from " +
                                     image.ToString() + " at a sample");
      }
    }
    images.push_back(std::move(image));
  }
  return images;
}

BlackBoxInducedMap::BlackBoxInducedMap(const ConfigMap& f, int m, int n,
                                       Space space, std::uint64_t seed)
    : vertices_(EnumerateDcrs(m, n)) {
  CheckSize(m, n);
  const std::size_t count = vertices_.size();
  std::string failure;
  for (int samples : {3, 6}) {
    samples_used_ = samples;
    std::vector<MinorTable> at_q;
    std::vector<MinorTable> at_fq;
    for (int k = 0; k < samples; ++k) {
      Configuration q = SampleGeneric(m, n, space, seed + k);
      Configuration fq = f(q);
      if (fq.m() != m || fq.n() != n) {
        throw InducedMapInconsistent("map changed the shape of a configuration");
      }
      // DCRs are PSL-invariant, so the reduced forms carry the same values
      // with far smaller entries.
      at_q.emplace_back(ReducedForm(q).config());
      try {
        at_fq.emplace_back(ReducedForm(fq).config());
      } catch (const NotGeneric&) {
        throw InducedMapInconsistent("image of a generic sample is not generic");
      }
    }
    std::map<std::vector<GaussianRational>, int> table;
    bool ambiguous = false;
    for (std::size_t v = 0; v < count; ++v) {
      std::vector<GaussianRational> key;
      for (const MinorTable& t : at_q) key.push_back(Evaluate(vertices_[v], t));
      if (!table.emplace(std::move(key), static_cast<int>(v)).second) {
        ambiguous = true;
        break;
      }
    }
    if (ambiguous) {
      failure = "two DCRs agree on every sample";
      continue;
    }
    images_.assign(count, -1);
    bool complete = true;
    for (std::size_t v = 0; v < count; ++v) {
      std::vector<GaussianRational> key;
      for (const MinorTable& t : at_fq) key.push_back(Evaluate(vertices_[v], t));
      auto it = table.find(key);
      if (it == table.end()) {
        failure = vertices_[v].ToString() + " o f matches no DCR";
        complete = false;
        break;
      }
      images_[v] = it->second;
    }
    if (complete) return;
  }
  throw InducedMapInconsistent(failure + " at " + std::to_string(samples_used_) +
                               " samples");
}

Dcr BlackBoxInducedMap::operator()(const Dcr& d) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), d);
  if (it == vertices_.end() || *it != d) {
    throw InvalidDcr(d.ToString() + " is not a vertex");
  }
  return vertices_[images_[it - vertices_.begin()]];
}

bool BlackBoxInducedMap::IsBijective() const {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Permutation FindRho(const ConfigMap& f, int m, int n, Space space,
                    std::uint64_t seed) {
  if (m <= 1) throw UnsupportedCase("rho is only determined for m > 1");
  CheckSize(m, n);
  if (n == 2 * m + 2) {
    throw UnsupportedCase("n = 2m+2 admits the exceptional automorphism");
  }
  BlackBoxInducedMap induced(f, m, n, space, seed);
  if (!induced.IsBijective()) {
    throw TheoremViolation("induced vertex map is not a bijection");
  }
  const auto& vertices = induced.vertices();
  std::vector<int> inverse(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    inverse[induced.images()[v]] = static_cast<int>(v);
  }
  // (rho f)^*(d) = f^*(rho^{-1} d), so pi = rho^{-1} must carry each target
  // V to (f^*)^{-1}(V).
  std::vector<Dcr> targets;
  std::vector<Dcr> preimages;
  for (int r = 1; r <= m; ++r) {
    std::vector<int> ess;
    for (int i = 1; i <= m; ++i) {
      if (i != r) ess.push_back(i);
    }
    for (int s = m + 3; s <= n; ++s) {
      Dcr v = MakeDcr(ess, r, m + 1, m + 2, s);
      auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
      targets.push_back(v);
      preimages.push_back(vertices[inverse[it - vertices.begin()]]);
    }
  }
  auto solutions = SolveIndexMaps(n, targets, preimages, 1);
  if (solutions.empty() && n <= 8) {
    for (const Permutation& pi : AllPermutations(n)) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < targets.size(); ++i) {
        ok = Permute(pi, targets[i]) == preimages[i];
      }
      if (ok) {
        solutions.push_back(pi);
        break;
      }
    }
  }
  if (solutions.empty()) {
    throw TheoremViolation("no permutation normalizes the induced map");
  }
  return solutions.front().Inverse();
}

Permutation FindRho(const TameMap& f, Space space, std::uint64_t seed) {
  return FindRho(AsConfigMap(f), f.m(), f.n(), space, seed);
}

RecoveredMap::RecoveredMap(ConfigMap f, Permutation rho)
    : f_(std::move(f)), rho_(std::move(rho)), sigma_(rho_.Inverse()) {}

ProjectiveTransform RecoveredMap::TauAt(const Configuration& q) const {
  Configuration normalized = ActPermutation(rho_, f_(q)).AsProjective();
  return GammaInverse(normalized) * Gamma(q.AsProjective());
}

Configuration RecoveredMap::operator()(const Configuration& q) const {
  return ActPermutation(sigma_, ActTransform(TauAt(q), q));
}

RecoveredMap Recover(const ConfigMap& f, int m, int n, Space space,
                     std::uint64_t seed) {
  return RecoveredMap(f, FindRho(f, m, n, space, seed));
}

Permutation EquivarianceReport::Alpha(const Permutation& theta) const {
  if (alpha_on_generators.empty()) {
    throw InvalidPermutation("alpha is undetermined");
  }
  const int n = alpha_on_generators.front().size();
  if (theta.size() != n) {
    throw InvalidPermutation("permutation size mismatch");
  }
  Permutation acc = Permutation::Identity(n);
  for (int i : theta.AdjacentWord()) acc = acc * alpha_on_generators[i - 1];
  return acc;
}

EquivarianceReport CheckStrictEquivariance(const ConfigMap& f, int m, int n,
                                           Space space, int samples,
                                           std::uint64_t seed) {
  CheckSize(m, n);
  EquivarianceReport report;
  const auto gens = AdjacentTranspositions(n);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < samples; ++k) {
    Configuration q = SampleGeneric(m, n, space, seed + k);
    Configuration fq = f(q);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto pi = RowPermutation(f(ActPermutation(gens[g], q)), fq);
      std::ostringstream where;
      where << "theta=" << gens[g] << " sample " << k;
      if (!pi) {
        report.witness = "f(theta q) is not a permutation of f(q) at " +
                         where.str();
        return report;
      }
      if (k == 0) {
        report.alpha_on_generators.push_back(*pi);
      } else if (*pi != report.alpha_on_generators[g]) {
        report.witness = "alpha(theta) depends on q at " + where.str();
        return report;
      }
    }
    for (int r = 0; r < 3; ++r) {
      Permutation theta = Permutation::Random(n, rng);
      Permutation expected = report.Alpha(theta);
      Configuration lhs = f(ActPermutation(theta, q));
      if (!ProjectivelyEqual(lhs, ActPermutation(expected, fq))) {
        std::ostringstream where;
        where << "f(theta q) != alpha(theta) f(q) for theta=" << theta
              << " sample " << k;
        report.witness = where.str();
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

}  // namespace genconf
