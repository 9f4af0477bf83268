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

#include "genconf/dcr.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "genconf/errors.h"

namespace genconf {

namespace {

using Quad = std::array<int, 4>;

Quad KleinCanonical(const Quad& q) {
  const auto [j, k, l, s] = q;
  return std::min({Quad{j, k, l, s}, Quad{k, j, s, l}, Quad{l, s, j, k},
                   Quad{s, l, k, j}});
}

// The minor d_{ess,a,b}: sorted index class and the sign of sorting.
std::pair<std::vector<int>, int> MinorClass(const std::vector<int>& ess, int a,
                                            int b) {
  std::vector<int> idx = ess;
  idx.push_back(a);
  idx.push_back(b);
  const int sign = SortingSign(idx);
  std::sort(idx.begin(), idx.end());
  return {std::move(idx), sign};
}

std::vector<int> Concat(const std::vector<int>& ess, int a, int b) {
  std::vector<int> idx = ess;
  idx.push_back(a);
  idx.push_back(b);
  return idx;
}

void CheckFits(const Dcr& d, int m, int n) {
  if (d.m() != m) {
    throw InvalidDcr(d.ToString() + " is a DCR for m = " +
                     std::to_string(d.m()) + ", not " + std::to_string(m));
  }
  if (d.max_index() > n) {
    throw InvalidDcr(d.ToString() + " uses a point beyond n = " +
                     std::to_string(n));
  }
}

}  // namespace

std::vector<int> Dcr::support() const {
  std::vector<int> s = ess_;
  s.insert(s.end(), quad_.begin(), quad_.end());
  std::sort(s.begin(), s.end());
  return s;
}

int Dcr::max_index() const {
  int mx = *std::max_element(quad_.begin(), quad_.end());
  if (!ess_.empty()) mx = std::max(mx, ess_.back());
  return mx;
}

std::string Dcr::ToString() const {
  std::string s = "e[{";
  for (std::size_t i = 0; i < ess_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ess_[i]);
  }
  s += "};";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += std::to_string(quad_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Dcr& d) {
  return os << d.ToString();
}

Dcr MakeDcr(std::vector<int> ess, int j, int k, int l, int s) {
  std::vector<int> all = ess;
  all.insert(all.end(), {j, k, l, s});
  for (int v : all) {
    if (v < 1) throw InvalidDcr("indices must be >= 1");
  }
  if (SortingSign(all) == 0) throw InvalidDcr("indices must be distinct");
  std::sort(ess.begin(), ess.end());
  return Dcr(std::move(ess), KleinCanonical({j, k, l, s}));
}

Dcr ParseDcr(std::string_view text) {
  auto fail = [&]() -> ParseError {
    return ParseError("bad DCR '" + std::string(text) + "', expected e[{i,...};j,k,l,s]");
  };
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.size() < 5 || t.rfind("e[{", 0) != 0 || t.back() != ']') throw fail();
  const auto close = t.find('}');
  if (close == std::string::npos || close + 1 >= t.size() || t[close + 1] != ';') {
    throw fail();
  }
  auto parse_list = [&](std::string_view body) {
    std::vector<int> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    for (;;) {
      auto comma = body.find(',', start);
      std::string_view tok = body.substr(start, comma - start);
      if (tok.empty() || tok.size() > 6 ||
          !std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw fail();
      }
      out.push_back(std::stoi(std::string(tok)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  std::vector<int> ess = parse_list(std::string_view(t).substr(3, close - 3));
  std::vector<int> quad =
      parse_list(std::string_view(t).substr(close + 2, t.size() - close - 3));
  if (quad.size() != 4) throw fail();
  return MakeDcr(std::move(ess), quad[0], quad[1], quad[2], quad[3]);
}

GaussianRational Evaluate(const Dcr& d, const Configuration& config) {
  CheckFits(d, config.m(), config.n());
  const auto& e = d.essential_support();
  const auto [j, k, l, s] = d.quad();
  GaussianRational jk = Minor(config, Concat(e, j, k));
  GaussianRational ls = Minor(config, Concat(e, l, s));
  GaussianRational jl = Minor(config, Concat(e, j, l));
  GaussianRational ks = Minor(config, Concat(e, k, s));
  if (jk.is_zero() || ls.is_zero() || jl.is_zero() || ks.is_zero()) {
    throw NotGeneric("a minor of " + d.ToString() + " vanishes");
  }
  return (jk * ls) / (jl * ks);
}

GaussianRational Evaluate(const Dcr& d, const MinorTable& minors) {
  const auto& e = d.essential_support();
  const auto [j, k, l, s] = d.quad();
  GaussianRational jk = minors(Concat(e, j, k));
  GaussianRational ls = minors(Concat(e, l, s));
  GaussianRational jl = minors(Concat(e, j, l));
  GaussianRational ks = minors(Concat(e, k, s));
  if (jk.is_zero() || ls.is_zero() || jl.is_zero() || ks.is_zero()) {
    throw NotGeneric("a minor of " + d.ToString() + " vanishes");
  }
  return (jk * ls) / (jl * ks);
}

Dcr Inverse(const Dcr& d) {
  const auto [j, k, l, s] = d.quad();
  return MakeDcr(d.essential_support(), j, l, k, s);
}

Dcr OneMinus(const Dcr& d) {
  const auto [j, k, l, s] = d.quad();
  return MakeDcr(d.essential_support(), j, s, l, k);
}

Dcr Permute(const Permutation& sigma, const Dcr& d) {
  if (d.max_index() > sigma.size()) {
    throw InvalidPermutation("permutation degree too small for " + d.ToString());
  }
  std::vector<int> ess;
  ess.reserve(d.essential_support().size());
  for (int i : d.essential_support()) ess.push_back(sigma(i));
  const auto [j, k, l, s] = d.quad();
  return MakeDcr(std::move(ess), sigma(j), sigma(k), sigma(l), sigma(s));
}

SignedMonomial SignedMonomial::operator*(const SignedMonomial& o) const {
  SignedMonomial out = *this;
  out.sign *= o.sign;
  for (const auto& [cls, exp] : o.factors) {
    int& e = out.factors[cls];
    e += exp;
    if (e == 0) out.factors.erase(cls);
  }
  return out;
}

SignedMonomial SignedMonomial::Inverse() const {
  SignedMonomial out = *this;
  for (auto& [cls, exp] : out.factors) exp = -exp;
  return out;
}

SignedMonomial FormalFraction(const Dcr& d) {
  const auto& e = d.essential_support();
  const auto [j, k, l, s] = d.quad();
  SignedMonomial mon;
  auto add = [&](int a, int b, int exp) {
    auto [cls, sign] = MinorClass(e, a, b);
    mon.sign *= sign;
    mon.factors[std::move(cls)] += exp;
  };
  add(j, k, 1);
  add(l, s, 1);
  add(j, l, -1);
  add(k, s, -1);
  return mon;
}

SignedMonomial FormalQuotient(const Dcr& mu, const Dcr& nu) {
  return FormalFraction(mu) * FormalFraction(nu).Inverse();
}

std::optional<Dcr> AsDcr(const SignedMonomial& mon) {
  if (mon.factors.size() != 4) return std::nullopt;
  std::vector<std::vector<int>> num;
  std::vector<std::vector<int>> den;
  for (const auto& [cls, exp] : mon.factors) {
    if (exp == 1) {
      num.push_back(cls);
    } else if (exp == -1) {
      den.push_back(cls);
    } else {
      return std::nullopt;
    }
  }
  if (num.size() != 2 || den.size() != 2) return std::nullopt;
  const std::size_t width = num[0].size();
  if (width < 2) return std::nullopt;

  std::vector<int> common = num[0];
  for (const auto* cls : {&num[1], &den[0], &den[1]}) {
    if (cls->size() != width) return std::nullopt;
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), cls->begin(),
                          cls->end(), std::back_inserter(next));
    common = std::move(next);
  }
  if (common.size() != width - 2) return std::nullopt;

  auto rest = [&](const std::vector<int>& cls) {
    std::vector<int> r;
    std::set_difference(cls.begin(), cls.end(), common.begin(), common.end(),
                        std::back_inserter(r));
    return r;
  };
  const std::vector<int> a = rest(num[0]);
  const std::vector<int> b = rest(num[1]);
  const std::vector<int> c = rest(den[0]);
  const std::vector<int> d = rest(den[1]);

  // Need a = {j,k}, b = {l,s}, c = {j,l}, d = {k,s}.
  std::vector<int> ac;
  std::set_intersection(a.begin(), a.end(), c.begin(), c.end(),
                        std::back_inserter(ac));
  if (ac.size() != 1) return std::nullopt;
  const int j = ac[0];
  const int k = a[0] == j ? a[1] : a[0];
  const int l = c[0] == j ? c[1] : c[0];
  std::vector<int> bd;
  std::set_intersection(b.begin(), b.end(), d.begin(), d.end(),
                        std::back_inserter(bd));
  if (bd.size() != 1) return std::nullopt;
  const int s = bd[0];
  std::vector<int> b_expect = {l, s};
  std::vector<int> d_expect = {k, s};
  std::sort(b_expect.begin(), b_expect.end());
  std::sort(d_expect.begin(), d_expect.end());
  if (b != b_expect || d != d_expect) return std::nullopt;
  std::vector<int> four = {j, k, l, s};
  if (SortingSign(four) == 0) return std::nullopt;

  Dcr candidate = MakeDcr(common, j, k, l, s);
  if (FormalFraction(candidate) != mon) return std::nullopt;
  return candidate;
}

bool Divides(const Dcr& nu, const Dcr& mu) {
  if (nu.m() != mu.m()) return false;
  return AsDcr(FormalQuotient(mu, nu)).has_value();
}

std::vector<Dcr> DivisorCandidates(const Dcr& mu, int n) {
  CheckFits(mu, mu.m(), n);
  const auto& ess = mu.essential_support();
  const auto [j, k, r, s] = mu.quad();
  const std::vector<int> supp = mu.support();
  std::vector<Dcr> out;
  for (int t = 1; t <= n; ++t) {
    if (std::binary_search(supp.begin(), supp.end(), t)) continue;
    out.push_back(MakeDcr(ess, j, k, r, t));
    out.push_back(MakeDcr(ess, k, j, s, t));
    out.push_back(MakeDcr(ess, r, s, j, t));
    out.push_back(MakeDcr(ess, s, r, k, t));
  }
  const std::array<int, 4> quad = mu.quad();
  for (std::size_t a = 0; a < ess.size(); ++a) {
    for (int p = 0; p < 4; ++p) {
      std::vector<int> new_ess = ess;
      new_ess[a] = quad[p];
      std::array<int, 4> q = quad;
      q[p] = ess[a];
      out.push_back(MakeDcr(std::move(new_ess), q[0], q[1], q[2], q[3]));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Dcr> EnumerateDcrs(int m, int n) {
  if (m < 1 || n < m + 3) {
    throw InvalidDcr("DCRs need m >= 1 and n >= m+3");
  }
  std::vector<Dcr> out;
  out.reserve(DcrCount(m, n));
  for (const auto& ess : Subsets(n, m - 1)) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (!std::binary_search(ess.begin(), ess.end(), v)) rest.push_back(v);
    }
    for (const auto& four : Subsets(static_cast<int>(rest.size()), 4)) {
      // The smallest index sits in front; the other three run over all
      // orders. Each Klein class has exactly one such member.
      const int a = rest[four[0] - 1];
      std::array<int, 3> tail = {rest[four[1] - 1], rest[four[2] - 1],
                                 rest[four[3] - 1]};
      do {
        out.push_back(MakeDcr(ess, a, tail[0], tail[1], tail[2]));
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / i;
  return b;
}

std::uint64_t DcrCount(int m, int n) {
  if (m < 1 || n < m + 3) return 0;
  const std::uint64_t r = static_cast<std::uint64_t>(n - m + 1);
  return Binomial(n, m - 1) * r * (r - 1) * (r - 2) * (r - 3) / 4;
}

GaussianRational PlueckerDefect(const Configuration& config,
                                const std::vector<int>& ess, int j, int k,
                                int l, int s) {
  auto d = [&](int a, int b) { return Minor(config, Concat(ess, a, b)); };
  return d(j, k) * d(l, s) + d(j, l) * d(s, k) + d(j, s) * d(k, l);
}

}  // namespace genconf
