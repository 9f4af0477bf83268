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

#include "genconf/configuration.h"

#include <algorithm>

#include "genconf/errors.h"

namespace genconf {

std::string SpaceName(Space s) {
  return s == Space::kProjective ? "projective" : "affine";
}

Space ParseSpace(const std::string& name) {
  if (name == "projective") return Space::kProjective;
  if (name == "affine") return Space::kAffine;
  throw ParseError("unknown space '" + name + "'");
}

Configuration::Configuration(int m, Space space,
                             std::vector<std::vector<GaussianRational>> rows)
    : m_(m), space_(space), rows_(std::move(rows)) {
  if (m_ < 1) throw InvalidConfiguration("dimension m must be >= 1");
  if (n() < m_ + 1) {
    throw InvalidConfiguration("need at least m+1 points, got " +
                               std::to_string(n()));
  }
  for (int i = 0; i < n(); ++i) {
    const auto& r = rows_[i];
    if (static_cast<int>(r.size()) != m_ + 1) {
      throw InvalidConfiguration("row " + std::to_string(i + 1) +
                                 " does not have m+1 coordinates");
    }
    if (space_ == Space::kAffine) {
      if (!r.back().is_one()) {
        throw InvalidConfiguration("affine row " + std::to_string(i + 1) +
                                   " must have last coordinate 1");
      }
    } else if (std::all_of(r.begin(), r.end(),
                           [](const auto& z) { return z.is_zero(); })) {
      throw InvalidConfiguration("projective row " + std::to_string(i + 1) +
                                 " is zero");
    }
  }
}

Configuration Configuration::AsProjective() const {
  return Configuration(m_, Space::kProjective, rows_);
}

bool ProjectivelyEqual(const Configuration& a, const Configuration& b) {
  if (a.m() != b.m() || a.n() != b.n()) return false;
  for (int i = 1; i <= a.n(); ++i) {
    if (!Proportional(a.point(i), b.point(i))) return false;
  }
  return true;
}

ProjectiveTransform::ProjectiveTransform(Matrix matrix)
    : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() < 2) {
    throw InvalidTransform("matrix must be square of size >= 2");
  }
  if (matrix_.Determinant().is_zero()) {
    throw InvalidTransform("matrix is singular");
  }
}

ProjectiveTransform ProjectiveTransform::Identity(int m) {
  return ProjectiveTransform(Matrix::Identity(m + 1));
}

ProjectiveTransform ProjectiveTransform::Random(int m, std::mt19937_64& rng,
                                                int bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  for (;;) {
    Matrix a(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        long re = entry(rng);
        long im = entry(rng);
        a(i, j) = GaussianRational(mpq_class(re), mpq_class(im));
      }
    }
    if (!a.Determinant().is_zero()) return ProjectiveTransform(std::move(a));
  }
}

ProjectiveTransform ProjectiveTransform::Inverse() const {
  return ProjectiveTransform(matrix_.Adjugate());
}

ProjectiveTransform ProjectiveTransform::operator*(
    const ProjectiveTransform& o) const {
  if (o.m() != m()) throw InvalidTransform("dimension mismatch");
  return ProjectiveTransform(matrix_ * o.matrix_);
}

bool ProjectivelyEqual(const ProjectiveTransform& a,
                       const ProjectiveTransform& b) {
  if (a.m() != b.m()) return false;
  return Proportional(a.matrix().data(), b.matrix().data());
}

int SortingSign(std::span<const int> idx) {
  int inversions = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void CheckMultiindex(const Configuration& config, std::span<const int> idx) {
  if (static_cast<int>(idx.size()) != config.m() + 1) {
    throw InvalidMultiindex("expected " + std::to_string(config.m() + 1) +
                            " indices");
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > config.n()) {
      throw InvalidMultiindex("index " + std::to_string(idx[a]) +
                              " out of range");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (idx[a] == idx[b]) {
        throw InvalidMultiindex("duplicate index " + std::to_string(idx[a]));
      }
    }
  }
}

GaussianRational RawMinor(const Configuration& config,
                          std::span<const int> idx) {
  std::vector<std::span<const GaussianRational>> rows;
  rows.reserve(idx.size());
  for (int i : idx) rows.push_back(config.point(i));
  return Determinant(rows);
}

}  // namespace

GaussianRational Minor(const Configuration& config, std::span<const int> idx) {
  CheckMultiindex(config, idx);
  return RawMinor(config, idx);
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool IsGeneric(const Configuration& config) {
  for (const auto& idx : Subsets(config.n(), config.m() + 1)) {
    if (RawMinor(config, idx).is_zero()) return false;
  }
  return true;
}

Configuration SampleGeneric(int m, int n, Space space, std::uint64_t seed,
                            int max_rounds) {
  if (m < 1 || n < m + 3) {
    throw InvalidConfiguration("sampling needs m >= 1 and n >= m+3");
  }
  std::mt19937_64 rng(seed);
  const long bound = 10L * n;
  std::uniform_int_distribution<long> entry(-bound, bound);
  auto draw = [&]() {
    long re = entry(rng);
    long im = entry(rng);
    return GaussianRational(mpq_class(re), mpq_class(im));
  };
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<std::vector<GaussianRational>> rows(n);
    for (auto& row : rows) {
      for (;;) {
        row.clear();
        for (int c = 0; c < m; ++c) row.push_back(draw());
        row.push_back(space == Space::kAffine ? GaussianRational(1) : draw());
        if (std::any_of(row.begin(), row.end(),
                        [](const auto& z) { return !z.is_zero(); })) {
          break;
        }
      }
    }
    Configuration q(m, space, std::move(rows));
    if (IsGeneric(q)) return q;
  }
  throw SamplingExhausted("no generic configuration after " +
                          std::to_string(max_rounds) + " rounds");
}

Configuration ActPermutation(const Permutation& sigma,
                             const Configuration& config) {
  if (sigma.size() != config.n()) {
    throw InvalidPermutation("permutation degree " +
                             std::to_string(sigma.size()) +
                             " does not match n = " + std::to_string(config.n()));
  }
  const Permutation inv = sigma.Inverse();
  std::vector<std::vector<GaussianRational>> rows(config.n());
  for (int i = 1; i <= config.n(); ++i) {
    auto src = config.point(inv(i));
    rows[i - 1].assign(src.begin(), src.end());
  }
  return Configuration(config.m(), config.space(), std::move(rows));
}

Configuration ActTransform(const ProjectiveTransform& t,
                           const Configuration& config) {
  if (t.m() != config.m()) throw InvalidTransform("dimension mismatch");
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(config.n());
  for (int i = 1; i <= config.n(); ++i) {
    auto image = t.matrix().Apply(config.point(i));
    if (config.space() == Space::kAffine) {
      const GaussianRational last = image.back();
      if (last.is_zero()) {
        throw ImageNotAffine("point " + std::to_string(i) +
                             " is sent to the hyperplane at infinity");
      }
      if (!last.is_one()) {
        const GaussianRational inv = last.reciprocal();
        for (auto& z : image) z *= inv;
      }
    }
    rows.push_back(std::move(image));
  }
  return Configuration(config.m(), config.space(), std::move(rows));
}

MinorTable::MinorTable(const Configuration& config)
    : m_(config.m()), n_(config.n()) {
  for (auto& idx : Subsets(n_, m_ + 1)) {
    GaussianRational d = RawMinor(config, idx);
    minors_.emplace(std::move(idx), std::move(d));
  }
}

const GaussianRational& MinorTable::Sorted(
    const std::vector<int>& sorted_idx) const {
  auto it = minors_.find(sorted_idx);
  if (it == minors_.end()) throw InvalidMultiindex("not a sorted multiindex");
  return it->second;
}

GaussianRational MinorTable::operator()(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != m_ + 1) {
    throw InvalidMultiindex("wrong multiindex length");
  }
  const int sign = SortingSign(idx);
  if (sign == 0) throw InvalidMultiindex("duplicate index");
  std::vector<int> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  const GaussianRational& d = Sorted(sorted);
  return sign > 0 ? d : -d;
}

bool MinorTable::AllNonzero() const {
  return std::none_of(minors_.begin(), minors_.end(),
                      [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace genconf
