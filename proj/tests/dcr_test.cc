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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "genconf/errors.h"
#include "test_util.h"

namespace genconf {
namespace {

using testing::Reduced235;

TEST(MakeDcrTest, AlreadyCanonical) {
  Dcr d = MakeDcr({1}, 2, 3, 4, 5);
  EXPECT_EQ(d.quad(), (std::array<int, 4>{2, 3, 4, 5}));
  EXPECT_EQ(d.ToString(), "e[{1};2,3,4,5]");
}

TEST(MakeDcrTest, KleinRelabellingsCoincide) {
  EXPECT_EQ(MakeDcr({1}, 3, 2, 5, 4), MakeDcr({1}, 2, 3, 4, 5));
  EXPECT_EQ(MakeDcr({1}, 4, 5, 2, 3), MakeDcr({1}, 2, 3, 4, 5));
  EXPECT_EQ(MakeDcr({1}, 5, 4, 3, 2), MakeDcr({1}, 2, 3, 4, 5));
  EXPECT_NE(MakeDcr({1}, 2, 4, 3, 5), MakeDcr({1}, 2, 3, 4, 5));
}

TEST(MakeDcrTest, EssentialSupportIsUnordered) {
  EXPECT_EQ(MakeDcr({3, 1}, 2, 4, 5, 6), MakeDcr({1, 3}, 2, 4, 5, 6));
}

TEST(MakeDcrTest, RejectsRepeatedIndices) {
  EXPECT_THROW(MakeDcr({1}, 2, 3, 4, 2), InvalidDcr);
  EXPECT_THROW(MakeDcr({2}, 2, 3, 4, 5), InvalidDcr);
  EXPECT_THROW(MakeDcr({1}, 0, 3, 4, 5), InvalidDcr);
}

TEST(ParseDcrTest, RoundTrip) {
  for (const Dcr& d : EnumerateDcrs(3, 7)) EXPECT_EQ(ParseDcr(d.ToString()), d);
  EXPECT_EQ(ParseDcr(" e[{ 1 }; 3,2,5,4 ] "), MakeDcr({1}, 2, 3, 4, 5));
  EXPECT_EQ(ParseDcr("e[{};1,2,3,4]").m(), 1);
  EXPECT_THROW(ParseDcr("e[{1};2,3,4]"), ParseError);
  EXPECT_THROW(ParseDcr("f[{1};2,3,4,5]"), ParseError);
}

TEST(DcrTest, Support) {
  Dcr d = MakeDcr({4, 2}, 7, 1, 3, 5);
  EXPECT_EQ(d.m(), 3);
  EXPECT_EQ(d.support(), (std::vector<int>{1, 2, 3, 4, 5, 7}));
  EXPECT_EQ(d.max_index(), 7);
}

TEST(EvaluateTest, ReducedExamples) {
  EXPECT_EQ(Evaluate(MakeDcr({1}, 2, 3, 4, 5), Reduced235()),
            GaussianRational(mpq_class(-2, 3)));
  EXPECT_EQ(Evaluate(MakeDcr({1}, 2, 5, 4, 3), Reduced235()),
            GaussianRational(mpq_class(5, 3)));
}

TEST(EvaluateTest, MatchesDefinition) {
  Configuration q = SampleGeneric(3, 7, Space::kProjective, 2);
  const std::vector<int> i = {6, 2};
  auto d = [&](int a, int b) {
    std::vector<int> idx = i;
    idx.push_back(a);
    idx.push_back(b);
    return Minor(q, idx);
  };
  GaussianRational expected = d(1, 3) * d(4, 7) / (d(1, 4) * d(3, 7));
  EXPECT_EQ(Evaluate(MakeDcr(i, 1, 3, 4, 7), q), expected);
}

TEST(EvaluateTest, OneDimensionalCase) {
  // With points [z:1] on the line the DCR is the classical cross ratio.
  std::vector<std::vector<GaussianRational>> rows;
  const GaussianRational z[] = {3, GaussianRational(-1, 2), mpq_class(5, 7), 11};
  for (const auto& x : z) rows.push_back({x, 1});
  Configuration q(1, Space::kAffine, rows);
  GaussianRational classical =
      (z[0] - z[1]) * (z[2] - z[3]) / ((z[0] - z[2]) * (z[1] - z[3]));
  EXPECT_EQ(Evaluate(MakeDcr({}, 1, 2, 3, 4), q), classical);
}

TEST(EvaluateTest, KleinRelabellingsAgreeAndOthersDiffer) {
  Configuration q = SampleGeneric(2, 6, Space::kProjective, 3);
  std::array<int, 4> x = {2, 3, 5, 6};
  std::set<GaussianRational> values;
  std::map<Dcr, GaussianRational> seen;
  do {
    GaussianRational v;
    {
      // Direct evaluation through the formula, bypassing canonicalization.
      auto d = [&](int a, int b) {
        std::vector<int> idx = {1, a, b};
        return Minor(q, idx);
      };
      v = d(x[0], x[1]) * d(x[2], x[3]) / (d(x[0], x[2]) * d(x[1], x[3]));
    }
    Dcr canon = MakeDcr({1}, x[0], x[1], x[2], x[3]);
    EXPECT_EQ(Evaluate(canon, q), v);
    auto [it, inserted] = seen.emplace(canon, v);
    if (!inserted) EXPECT_EQ(it->second, v);
    values.insert(v);
  } while (std::next_permutation(x.begin(), x.end()));
  // 24 orderings, 4 per function.
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(values.size(), 6u);
}

TEST(EvaluateTest, Errors) {
  Configuration q = Reduced235();
  EXPECT_THROW(Evaluate(MakeDcr({1}, 2, 3, 4, 6), q), InvalidDcr);
  EXPECT_THROW(Evaluate(MakeDcr({1, 2}, 3, 4, 5, 6), q), InvalidDcr);
  Configuration degenerate = testing::Config(
      2, Space::kProjective, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}});
  EXPECT_THROW(Evaluate(MakeDcr({1}, 2, 5, 3, 4), degenerate), NotGeneric);
  EXPECT_NO_THROW(Evaluate(MakeDcr({1}, 2, 3, 4, 5), degenerate));
}

TEST(EvaluateTest, OmitsZeroAndOne) {
  for (auto [m, n] : {std::pair{2, 5}, std::pair{3, 6}, std::pair{2, 7}}) {
    const auto dcrs = EnumerateDcrs(m, n);
    for (int seed = 0; seed < 5; ++seed) {
      MinorTable minors(SampleGeneric(m, n, Space::kProjective, seed));
      for (const Dcr& d : dcrs) {
        GaussianRational v = Evaluate(d, minors);
        EXPECT_FALSE(v.is_zero()) << d;
        EXPECT_FALSE(v.is_one()) << d;
      }
    }
  }
}

TEST(EvaluateTest, ProjectiveInvariance) {
  std::mt19937_64 rng(9);
  const auto dcrs = EnumerateDcrs(3, 7);
  for (int trial = 0; trial < 5; ++trial) {
    Configuration q = SampleGeneric(3, 7, Space::kProjective, trial);
    Configuration tq = ActTransform(ProjectiveTransform::Random(3, rng), q);
    MinorTable a(q);
    MinorTable b(tq);
    for (std::size_t i = 0; i < dcrs.size(); i += 7) {
      EXPECT_EQ(Evaluate(dcrs[i], a), Evaluate(dcrs[i], b));
    }
  }
}

TEST(InverseTest, Examples) {
  Dcr d = MakeDcr({1}, 2, 3, 4, 5);
  EXPECT_EQ(Inverse(d), MakeDcr({1}, 2, 4, 3, 5));
  EXPECT_EQ(OneMinus(d), MakeDcr({1}, 2, 5, 4, 3));
}

TEST(InverseTest, InvolutionsAndValues) {
  Configuration q = SampleGeneric(2, 6, Space::kProjective, 4);
  for (const Dcr& d : EnumerateDcrs(2, 6)) {
    EXPECT_EQ(Inverse(Inverse(d)), d);
    EXPECT_EQ(OneMinus(OneMinus(d)), d);
    GaussianRational v = Evaluate(d, q);
    EXPECT_EQ(Evaluate(Inverse(d), q), v.reciprocal());
    EXPECT_EQ(Evaluate(OneMinus(d), q), GaussianRational(1) - v);
  }
}

TEST(PermuteTest, Identity) {
  for (const Dcr& d : EnumerateDcrs(2, 5)) {
    EXPECT_EQ(Permute(Permutation::Identity(5), d), d);
  }
}

TEST(PermuteTest, ActionLaw) {
  std::mt19937_64 rng(5);
  const auto dcrs = EnumerateDcrs(3, 7);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation s = Permutation::Random(7, rng);
    Permutation t = Permutation::Random(7, rng);
    const Dcr& d = dcrs[trial * 11 % dcrs.size()];
    EXPECT_EQ(Permute(s * t, d), Permute(s, Permute(t, d)));
  }
}

TEST(PermuteTest, MatchesConfigurationAction) {
  // (sigma d)(sigma q) = d(q).
  std::mt19937_64 rng(6);
  Configuration q = SampleGeneric(2, 7, Space::kProjective, 8);
  const auto dcrs = EnumerateDcrs(2, 7);
  for (int trial = 0; trial < 30; ++trial) {
    Permutation s = Permutation::Random(7, rng);
    const Dcr& d = dcrs[trial * 17 % dcrs.size()];
    EXPECT_EQ(Evaluate(Permute(s, d), ActPermutation(s, q)), Evaluate(d, q));
  }
}

TEST(PermuteTest, Transitive) {
  const auto dcrs = EnumerateDcrs(2, 5);
  std::set<Dcr> orbit;
  for (const Permutation& s : AllPermutations(5)) orbit.insert(Permute(s, dcrs[0]));
  EXPECT_EQ(orbit.size(), dcrs.size());
}

TEST(FormalQuotientTest, Examples) {
  Dcr a = MakeDcr({1}, 2, 3, 4, 5);
  SignedMonomial self = FormalQuotient(a, a);
  EXPECT_EQ(self.sign, 1);
  EXPECT_TRUE(self.is_constant());
  EXPECT_FALSE(AsDcr(self).has_value());
  EXPECT_EQ(AsDcr(FormalQuotient(a, MakeDcr({1}, 2, 3, 4, 6))),
            MakeDcr({1}, 6, 3, 4, 5));
  EXPECT_FALSE(AsDcr(FormalQuotient(a, Inverse(a))).has_value());
}

TEST(FormalFractionTest, RoundTripsThroughAsDcr) {
  for (const Dcr& d : EnumerateDcrs(3, 7)) EXPECT_EQ(AsDcr(FormalFraction(d)), d);
}

TEST(DividesTest, Examples) {
  Dcr a = MakeDcr({1}, 2, 3, 4, 5);
  EXPECT_TRUE(Divides(MakeDcr({1}, 2, 3, 4, 6), a));
  EXPECT_FALSE(Divides(a, a));
  EXPECT_TRUE(Divides(a, MakeDcr({2}, 1, 3, 4, 5)));
  EXPECT_FALSE(Divides(a, Inverse(a)));
}

TEST(DividesTest, Symmetric) {
  const auto dcrs = EnumerateDcrs(2, 6);
  for (const Dcr& mu : dcrs) {
    for (const Dcr& nu : DivisorCandidates(mu, 6)) EXPECT_TRUE(Divides(mu, nu));
  }
}

TEST(DivisorCandidatesTest, DifferentSupportFamily) {
  Dcr mu = MakeDcr({1}, 2, 3, 4, 5);
  int different_support = 0;
  for (const Dcr& nu : DivisorCandidates(mu, 6)) {
    EXPECT_TRUE(Divides(nu, mu));
    if (nu.support() != mu.support()) ++different_support;
  }
  EXPECT_EQ(different_support, 4);
}

class DivisorOracleTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(DivisorOracleTest, MatchesExhaustiveSearch) {
  const auto [m, n] = GetParam();
  const auto dcrs = EnumerateDcrs(m, n);
  for (const Dcr& mu : dcrs) {
    std::vector<Dcr> exhaustive;
    for (const Dcr& nu : dcrs) {
      if (Divides(nu, mu)) exhaustive.push_back(nu);
    }
    ASSERT_EQ(DivisorCandidates(mu, n), exhaustive) << mu;
    ASSERT_EQ(static_cast<int>(exhaustive.size()), 4 * (n - m - 3) + 4 * (m - 1))
        << mu;
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, DivisorOracleTest,
                         ::testing::Values(std::pair{2, 6}, std::pair{2, 7},
                                           std::pair{3, 7}));

// mu/nu is a DCR exactly when its values at random points are those of a DCR.
TEST(DividesTest, AgreesWithNumericQuotients) {
  for (auto [m, n] : {std::pair{2, 6}, std::pair{3, 6}}) {
    const auto dcrs = EnumerateDcrs(m, n);
    std::vector<MinorTable> tables;
    for (int k = 0; k < 3; ++k) {
      tables.emplace_back(SampleGeneric(m, n, Space::kProjective, 500 + k));
    }
    std::vector<std::vector<GaussianRational>> values(dcrs.size());
    std::set<std::vector<GaussianRational>> known;
    for (std::size_t v = 0; v < dcrs.size(); ++v) {
      for (const auto& t : tables) values[v].push_back(Evaluate(dcrs[v], t));
      known.insert(values[v]);
    }
    for (std::size_t a = 0; a < dcrs.size(); ++a) {
      for (std::size_t b = 0; b < dcrs.size(); ++b) {
        std::vector<GaussianRational> quotient;
        for (int k = 0; k < 3; ++k) quotient.push_back(values[a][k] / values[b][k]);
        const bool numeric = a != b && known.count(quotient) > 0;
        ASSERT_EQ(Divides(dcrs[b], dcrs[a]), numeric) << dcrs[b] << " | " << dcrs[a];
      }
    }
  }
}

// Canonical forms from all labelled instantiations, computed independently.
std::set<std::pair<std::vector<int>, std::array<int, 4>>> BruteForceCanonical(
    int m, int n) {
  std::set<std::pair<std::vector<int>, std::array<int, 4>>> out;
  for (const auto& ess : Subsets(n, m - 1)) {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
      if (!std::binary_search(ess.begin(), ess.end(), x)) rest.push_back(x);
    }
    for (int j : rest) {
      for (int k : rest) {
        for (int l : rest) {
          for (int s : rest) {
            if (j == k || j == l || j == s || k == l || k == s || l == s) continue;
            std::array<std::array<int, 4>, 4> klein = {{{j, k, l, s},
                                                        {k, j, s, l},
                                                        {l, s, j, k},
                                                        {s, l, k, j}}};
            out.emplace(ess, *std::min_element(klein.begin(), klein.end()));
          }
        }
      }
    }
  }
  return out;
}

TEST(EnumerateDcrsTest, CountsMatchFormulaAndBruteForce) {
  const std::tuple<int, int, std::uint64_t> cases[] = {
      {2, 5, 30}, {2, 6, 180}, {3, 6, 90}, {2, 7, 630}, {3, 7, 630}, {3, 8, 2520}};
  for (const auto& [m, n, expected] : cases) {
    const auto dcrs = EnumerateDcrs(m, n);
    EXPECT_EQ(dcrs.size(), expected);
    EXPECT_EQ(DcrCount(m, n), expected);
    auto brute = BruteForceCanonical(m, n);
    ASSERT_EQ(brute.size(), dcrs.size());
    auto it = brute.begin();
    for (const Dcr& d : dcrs) {
      EXPECT_EQ(d.essential_support(), it->first);
      EXPECT_EQ(d.quad(), it->second);
      ++it;
    }
  }
}

TEST(PlueckerTest, VanishesOnRandomConfigurations) {
  std::mt19937_64 rng(10);
  for (auto [m, n] : {std::pair{2, 5}, std::pair{3, 6}, std::pair{4, 7}}) {
    for (int seed = 0; seed < 10; ++seed) {
      Configuration q = SampleGeneric(m, n, Space::kProjective, seed);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i + 1;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> ess(perm.begin(), perm.begin() + (m - 1));
      EXPECT_TRUE(PlueckerDefect(q, ess, perm[m - 1], perm[m], perm[m + 1],
                                 perm[m + 2])
                      .is_zero());
    }
  }
}

TEST(PlueckerTest, RepeatedRowsGiveZero) {
  Configuration q = testing::Config(
      2, Space::kProjective, {{1, 2, 3}, {4, 5, 6}, {4, 5, 6}, {7, 8, 10}, {1, 0, 2}});
  EXPECT_TRUE(PlueckerDefect(q, {1}, 2, 3, 4, 5).is_zero());
}

// Relations between DCRs sharing an essential support, and the exchange
// relation for the essential support, both symbolically and numerically.
TEST(DcrIdentitiesTest, ThreeRelations) {
  std::mt19937_64 rng(12);
  for (auto [m, n] : {std::pair{2, 7}, std::pair{3, 8}}) {
    Configuration q = SampleGeneric(m, n, Space::kProjective, 77);
    MinorTable minors(q);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i + 1;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> ess(perm.begin(), perm.begin() + (m - 1));
      const int j = perm[m - 1], k = perm[m], r = perm[m + 1], s = perm[m + 2],
                t = perm[m + 3];
      const Dcr jkrs = MakeDcr(ess, j, k, r, s);
      const Dcr jkrt = MakeDcr(ess, j, k, r, t);
      const GaussianRational a = Evaluate(jkrs, minors);
      const GaussianRational b = Evaluate(jkrt, minors);
      const GaussianRational one(1);

      // (a)
      const Dcr tkrs = MakeDcr(ess, t, k, r, s);
      EXPECT_EQ(AsDcr(FormalQuotient(jkrs, jkrt)), tkrs);
      EXPECT_EQ(Evaluate(tkrs, minors), a / b);

      // (b)
      const Dcr jkts = MakeDcr(ess, j, k, t, s);
      auto ratio_b = AsDcr(FormalQuotient(OneMinus(jkrs), OneMinus(jkrt)));
      ASSERT_TRUE(ratio_b.has_value());
      EXPECT_EQ(OneMinus(*ratio_b), jkts);
      EXPECT_EQ(Evaluate(jkts, minors), one - (one - a) / (one - b));

      // (c)
      const Dcr jtrs = MakeDcr(ess, j, t, r, s);
      auto ratio_c = AsDcr(
          FormalQuotient(OneMinus(Inverse(jkrs)), OneMinus(Inverse(jkrt))));
      ASSERT_TRUE(ratio_c.has_value());
      EXPECT_EQ(Inverse(OneMinus(*ratio_c)), jtrs);
      EXPECT_EQ(Evaluate(jtrs, minors),
                (one - (one - a.reciprocal()) / (one - b.reciprocal())).reciprocal());

      // (d): swap an essential index i with quad entries.
      std::vector<int> rest(perm.begin(), perm.begin() + (m - 2));
      const int i = perm[m - 2];
      auto with = [&](int x) {
        std::vector<int> e = rest;
        e.push_back(x);
        return e;
      };
      const Dcr lhs = MakeDcr(with(i), j, k, r, s);
      const Dcr f1 = MakeDcr(with(j), i, k, r, s);
      const Dcr f2 = MakeDcr(with(s), j, k, r, i);
      const Dcr g1 = MakeDcr(with(k), j, i, r, s);
      const Dcr g2 = MakeDcr(with(r), j, k, i, s);
      EXPECT_EQ(FormalFraction(lhs), FormalFraction(f1) * FormalFraction(f2));
      EXPECT_EQ(FormalFraction(lhs), FormalFraction(g1) * FormalFraction(g2));
      EXPECT_EQ(Evaluate(lhs, minors), Evaluate(f1, minors) * Evaluate(f2, minors));
      EXPECT_EQ(Evaluate(lhs, minors), Evaluate(g1, minors) * Evaluate(g2, minors));
      EXPECT_TRUE(Divides(f1, lhs));
      EXPECT_TRUE(Divides(g2, lhs));

      // Sum to one and reciprocal.
      EXPECT_EQ(Evaluate(MakeDcr(ess, j, s, r, k), minors), one - a);
      EXPECT_EQ(Evaluate(MakeDcr(ess, j, r, k, s), minors), a.reciprocal());
    }
  }
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(Binomial(7, 3), 35u);
  EXPECT_EQ(Binomial(5, 0), 1u);
  EXPECT_EQ(Binomial(3, 5), 0u);
}

}  // namespace
}  // namespace genconf
