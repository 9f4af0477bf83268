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

#include "genconf/gaussian_rational.h"

#include <cctype>
#include <stdexcept>

#include "genconf/errors.h"

namespace genconf {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

mpq_class ParseRational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("bad rational '" + std::string(text) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::FromStrings(std::string_view re,
                                               std::string_view im) {
  return {ParseRational(re), ParseRational(im)};
}

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.reciprocal();
}

std::strong_ordering operator<=>(const GaussianRational& a,
                                 const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GaussianRational::ToString() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im_part;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.ToString();
}

}  // namespace genconf
