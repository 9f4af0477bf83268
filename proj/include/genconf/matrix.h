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

#ifndef GENCONF_MATRIX_H_
#define GENCONF_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "genconf/gaussian_rational.h"

namespace genconf {

// Dense row-major matrix over GaussianRational. Sizes here are tiny
// ((m+1)x(m+1) with m < 10), so everything is straightforward elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const GaussianRational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const GaussianRational> data() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator*=(const GaussianRational& c);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // this * v for a column vector v.
  std::vector<GaussianRational> Apply(
      std::span<const GaussianRational> v) const;

  Matrix Transposed() const;
  GaussianRational Determinant() const;
  // adj(A) with A * adj(A) = det(A) * I.
  Matrix Adjugate() const;
  // Throws std::domain_error when singular.
  Matrix Inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

// Determinant of the square matrix whose rows are given.
GaussianRational Determinant(
    std::span<const std::span<const GaussianRational>> rows);

// True iff u = c * v for some nonzero scalar c, with both vectors nonzero.
// Decided by cross-multiplication, so no representative is preferred.
bool Proportional(std::span<const GaussianRational> u,
                  std::span<const GaussianRational> v);

}  // namespace genconf

#endif  // GENCONF_MATRIX_H_
