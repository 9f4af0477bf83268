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

#include "genconf/matrix.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace genconf {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(
    std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix& Matrix::operator*=(const GaussianRational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

std::vector<GaussianRational> Matrix::Apply(
    std::span<const GaussianRational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
  std::vector<GaussianRational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero() || (*this)(i, j).is_zero()) continue;
      out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

// Gaussian elimination on a scratch copy; returns the determinant.
bool Integral(const std::vector<GaussianRational>& a) {
  return std::all_of(a.begin(), a.end(), [](const GaussianRational& z) {
    return z.re().get_den() == 1 && z.im().get_den() == 1;
  });
}

// Fraction-free elimination; every division is exact over Z[i].
GaussianRational BareissDeterminant(std::vector<GaussianRational> a,
                                    std::size_t n) {
  GaussianRational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[k * n + j]);
      }
      sign = -sign;
    }
    const GaussianRational& p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        GaussianRational v = a[i * n + j] * p - a[i * n + k] * a[k * n + j];
        if (!prev.is_one()) v /= prev;
        a[i * n + j] = std::move(v);
      }
    }
    prev = p;
  }
  GaussianRational det = a[n * n - 1];
  return sign < 0 ? -det : det;
}

GaussianRational EliminationDeterminant(std::vector<GaussianRational> a,
                                        std::size_t n) {
  if (n > 1 && Integral(a)) return BareissDeterminant(std::move(a), n);
  GaussianRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
      }
      det = -det;
    }
    const GaussianRational p = a[col * n + col];
    det *= p;
    const GaussianRational inv = p.reciprocal();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col].is_zero()) continue;
      GaussianRational factor = a[r * n + col] * inv;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (!a[col * n + j].is_zero()) a[r * n + j] -= factor * a[col * n + j];
      }
    }
  }
  return det;
}

}  // namespace

GaussianRational Matrix::Determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square");
  if (rows_ == 0) return 1;
  return EliminationDeterminant(data_, rows_);
}

GaussianRational Determinant(
    std::span<const std::span<const GaussianRational>> rows) {
  const std::size_t n = rows.size();
  std::vector<GaussianRational> a;
  a.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("determinant of non-square");
    a.insert(a.end(), r.begin(), r.end());
  }
  if (n == 0) return 1;
  return EliminationDeterminant(std::move(a), n);
}

Matrix Matrix::Adjugate() const {
  if (!is_square()) throw std::invalid_argument("adjugate of non-square");
  const std::size_t n = rows_;
  Matrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<GaussianRational> minor((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[k++] = (*this)(r, c);
        }
      }
      GaussianRational cof = EliminationDeterminant(minor, n - 1);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = std::move(cof);
    }
  }
  return adj;
}

Matrix Matrix::Inverse() const {
  GaussianRational det = Determinant();
  if (det.is_zero()) throw std::domain_error("singular matrix");
  Matrix inv = Adjugate();
  inv *= det.reciprocal();
  return inv;
}

bool Proportional(std::span<const GaussianRational> u,
                  std::span<const GaussianRational> v) {
  if (u.size() != v.size()) return false;
  std::size_t pivot = 0;
  while (pivot < u.size() && u[pivot].is_zero()) ++pivot;
  if (pivot == u.size() || v[pivot].is_zero()) return false;
  // u_a * v_p == v_a * u_p for every a.
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (a == pivot) continue;
    if (u[a] * v[pivot] != v[a] * u[pivot]) return false;
  }
  return true;
}

}  // namespace genconf
