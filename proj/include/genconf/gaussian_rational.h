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

#ifndef GENCONF_GAUSSIAN_RATIONAL_H_
#define GENCONF_GAUSSIAN_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace genconf {

// Exact complex scalar re + im*i with arbitrary-precision rational parts.
// Both parts are kept in canonical form (lowest terms, positive
// denominator), so operator== is structural equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(static_cast<long>(re)) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im = 0);

  // Parses "p/q" strings for each part; throws ParseError.
  static GaussianRational FromStrings(std::string_view re, std::string_view im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // Throws std::domain_error on zero.
  GaussianRational reciprocal() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); only meaningful as a container key.
  friend std::strong_ordering operator<=>(const GaussianRational& a,
                                          const GaussianRational& b);

  // "-2/3", "5", "1/2+3/4*i", "-7*i".
  std::string ToString() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Parses one canonical-or-not rational like "-6/4" into canonical form.
mpq_class ParseRational(std::string_view text);

}  // namespace genconf

#endif  // GENCONF_GAUSSIAN_RATIONAL_H_
