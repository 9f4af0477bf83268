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

#include "genconf/normalize.h"

#include <algorithm>

#include "genconf/errors.h"

namespace genconf {

namespace {

std::vector<GaussianRational> Basis(int m, int i) {
  std::vector<GaussianRational> v(m + 1);
  v[i - 1] = 1;
  return v;
}

std::vector<GaussianRational> AllOnes(int m) {
  return std::vector<GaussianRational>(m + 1, GaussianRational(1));
}

Configuration NormalizedRows(const Configuration& config) {
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(config.n());
  for (int i = 1; i <= config.n(); ++i) {
    rows.push_back(NormalizedRow(config.point(i)));
  }
  return Configuration(config.m(), Space::kProjective, std::move(rows));
}

}  // namespace

std::vector<GaussianRational> NormalizedRow(
    std::span<const GaussianRational> row) {
  std::vector<GaussianRational> out(row.begin(), row.end());
  auto last = std::find_if(out.rbegin(), out.rend(),
                           [](const auto& z) { return !z.is_zero(); });
  if (last == out.rend()) throw InvalidConfiguration("zero row");
  if (last->is_one()) return out;
  const GaussianRational inv = last->reciprocal();
  for (auto& z : out) z *= inv;
  return out;
}

bool IsReduced(const Configuration& config) {
  const int m = config.m();
  if (config.space() != Space::kProjective || config.n() < m + 2) return false;
  for (int i = 1; i <= m + 1; ++i) {
    if (!Proportional(config.point(i), Basis(m, i))) return false;
  }
  if (!Proportional(config.point(m + 2), AllOnes(m))) return false;
  return IsGeneric(config);
}

ReducedConfiguration::ReducedConfiguration(const Configuration& config)
    : config_(NormalizedRows(config)) {
  if (!IsReduced(config_)) {
    throw InvalidConfiguration("configuration is not in the reduced space");
  }
}

namespace {

void CheckNormalizable(const Configuration& config) {
  if (config.n() < config.m() + 3) {
    throw InvalidConfiguration("normalization needs n >= m+3");
  }
}

// d_{1..m+1} with the point in position i (0-based) replaced by point t.
GaussianRational Replaced(const MinorTable& minors, int m, int i, int t) {
  std::vector<int> idx(m + 1);
  for (int r = 0; r <= m; ++r) idx[r] = r == i ? t : r + 1;
  return minors(idx);
}

ProjectiveTransform GammaFromMinors(const Configuration& config,
                                    const MinorTable& minors) {
  const int m = config.m();
  // B = A^T has the first m+1 points as columns.
  Matrix b(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    auto row = config.point(i + 1);
    for (int j = 0; j <= m; ++j) b(j, i) = row[j];
  }
  std::vector<GaussianRational> d(m + 1);
  for (int i = 0; i <= m; ++i) d[i] = Replaced(minors, m, i, m + 2);
  Matrix t = b.Adjugate();
  for (int i = 0; i <= m; ++i) {
    GaussianRational scale = 1;
    for (int k = 0; k <= m; ++k) {
      if (k != i) scale *= d[k];
    }
    for (int j = 0; j <= m; ++j) t(i, j) *= scale;
  }
  return ProjectiveTransform(std::move(t));
}

MinorTable GenericMinors(const Configuration& projective) {
  MinorTable minors(projective);
  if (!minors.AllNonzero()) {
    throw NotGeneric("gamma needs a generic configuration");
  }
  return minors;
}

// Coordinate i of gamma q_t is proportional to d(i -> t) / d(i -> m+2).
ReducedConfiguration ReducedFromMinors(const Configuration& config,
                                       const MinorTable& minors) {
  const int m = config.m();
  std::vector<GaussianRational> d(m + 1);
  for (int i = 0; i <= m; ++i) d[i] = Replaced(minors, m, i, m + 2);
  std::vector<std::vector<GaussianRational>> rows;
  for (int t = 1; t <= config.n(); ++t) {
    std::vector<GaussianRational> row(m + 1);
    if (t <= m + 1) {
      row[t - 1] = 1;
    } else {
      for (int i = 0; i <= m; ++i) row[i] = Replaced(minors, m, i, t) / d[i];
    }
    rows.push_back(std::move(row));
  }
  return ReducedConfiguration(
      Configuration(m, Space::kProjective, std::move(rows)));
}

}  // namespace

ProjectiveTransform Gamma(const Configuration& config) {
  CheckNormalizable(config);
  const Configuration projective = config.AsProjective();
  return GammaFromMinors(projective, GenericMinors(projective));
}

ProjectiveTransform GammaInverse(const Configuration& config) {
  CheckNormalizable(config);
  const Configuration projective = config.AsProjective();
  const MinorTable minors = GenericMinors(projective);
  const int m = config.m();
  Matrix b(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    const GaussianRational d = Replaced(minors, m, i, m + 2);
    auto row = projective.point(i + 1);
    for (int j = 0; j <= m; ++j) b(j, i) = row[j] * d;
  }
  return ProjectiveTransform(std::move(b));
}

std::pair<ProjectiveTransform, ReducedConfiguration> Decompose(
    const Configuration& config) {
  CheckNormalizable(config);
  const Configuration projective = config.AsProjective();
  const MinorTable minors = GenericMinors(projective);
  return {GammaFromMinors(projective, minors),
          ReducedFromMinors(projective, minors)};
}

ReducedConfiguration ReducedForm(const Configuration& config) {
  CheckNormalizable(config);
  const Configuration projective = config.AsProjective();
  return ReducedFromMinors(projective, GenericMinors(projective));
}

Configuration Compose(const ProjectiveTransform& t,
                      const ReducedConfiguration& reduced) {
  return ActTransform(t.Inverse(), reduced.config());
}

Matrix EmbedP(const ReducedConfiguration& reduced) {
  const int m = reduced.m();
  const int n = reduced.n();
  Matrix p(m, std::max(0, n - m - 2));
  for (int s = 1; s <= m; ++s) {
    for (int t = m + 3; t <= n; ++t) {
      auto z = reduced.config().point(t);
      p(s - 1, t - m - 3) = GaussianRational(1) - z[m] / z[s - 1];
    }
  }
  return p;
}

std::optional<ProjectiveTransform> SolveTransform(const Configuration& q,
                                                  const Configuration& target) {
  if (q.m() != target.m() || q.n() != target.n()) return std::nullopt;
  const Configuration pq = q.AsProjective();
  const Configuration pt = target.AsProjective();
  ProjectiveTransform a = GammaInverse(pt) * Gamma(pq);
  if (!ProjectivelyEqual(ActTransform(a, pq), pt)) return std::nullopt;
  return a;
}

}  // namespace genconf
