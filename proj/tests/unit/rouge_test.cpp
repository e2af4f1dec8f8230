// Copyright 2026 The RDASS Authors.
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

#include "rdass/rouge.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rdass/error.hpp"

namespace rdass {
namespace {

TokenSequence seq(std::vector<std::string> tokens) {
  return TokenSequence{std::move(tokens), SchemeKind::kWord};
}

void expect_score(const RougeScore& s, double p, double r, double f) {
  EXPECT_DOUBLE_EQ(s.precision, p);
  EXPECT_DOUBLE_EQ(s.recall, r);
  EXPECT_DOUBLE_EQ(s.f1, f);
}

TEST(RougeN, IdenticalSequences) {
  expect_score(rouge_n(seq({"a", "b", "c"}), seq({"a", "b", "c"}), 2), 1, 1,
               1);
}

TEST(RougeN, OneSharedBigram) {
  // {ab, bc} vs {ab, bd}: overlap 1 of 2 on each side.
  expect_score(rouge_n(seq({"a", "b", "c"}), seq({"a", "b", "d"}), 2), 0.5,
               0.5, 0.5);
}

TEST(RougeN, EmptyCandidateScoresZero) {
  expect_score(rouge_n(seq({}), seq({"a"}), 1), 0, 0, 0);
  expect_score(rouge_n(seq({"a"}), seq({}), 1), 0, 0, 0);
  expect_score(rouge_n(seq({}), seq({}), 1), 0, 0, 0);
}

TEST(RougeN, ClipsRepeatedCounts) {
  // candidate "a a a" against reference "a b": overlap min(3, 1) = 1.
  expect_score(rouge_n(seq({"a", "a", "a"}), seq({"a", "b"}), 1), 1.0 / 3,
               0.5, 0.4);
}

TEST(RougeN, RejectsZeroOrder) {
  EXPECT_THROW(rouge_n(seq({"a"}), seq({"a"}), 0), ArgumentError);
}

TEST(RougeL, Examples) {
  // LCS(abcd, acbd) = 3 (e.g. "abd").
  expect_score(rouge_l(seq({"a", "b", "c", "d"}), seq({"a", "c", "b", "d"})),
               0.75, 0.75, 0.75);
  expect_score(rouge_l(seq({"a"}), seq({"a"})), 1, 1, 1);
  expect_score(rouge_l(seq({"x"}), seq({"y"})), 0, 0, 0);
  expect_score(rouge_l(seq({}), seq({"y"})), 0, 0, 0);
}

TEST(RougeScoreTest, F1IsHarmonicMean) {
  EXPECT_DOUBLE_EQ(f_measure(0.5, 1.0), 2 * 0.5 / 1.5);
  EXPECT_EQ(f_measure(0.0, 0.0), 0.0);
}

TEST(RougeVariantTest, ParseAndSelect) {
  RougeScore s{0.25, 0.5, 1.0 / 3};
  EXPECT_EQ(select(s, parse_rouge_variant("precision")), 0.25);
  EXPECT_EQ(select(s, parse_rouge_variant("recall")), 0.5);
  EXPECT_EQ(select(s, parse_rouge_variant("f1")), 1.0 / 3);
  EXPECT_THROW(parse_rouge_variant("F2"), ArgumentError);
}

class RougeProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{2020};
};

TEST_F(RougeProperties, SelfScoreIsOne) {
  for (int t = 0; t < 300; ++t) {
    auto x = testing::random_tokens(rng_, 10, 4);
    for (size_t n = 1; n <= 3; ++n) {
      if (x.size() < n) continue;
      EXPECT_EQ(rouge_n(seq(x), seq(x), n).f1, 1.0);
    }
    if (!x.empty()) {
      EXPECT_EQ(rouge_l(seq(x), seq(x)).f1, 1.0);
    }
  }
}

TEST_F(RougeProperties, SwappingArgumentsSwapsPrecisionAndRecall) {
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_tokens(rng_, 8, 4);
    auto b = testing::random_tokens(rng_, 8, 4);
    for (size_t n = 1; n <= 2; ++n) {
      RougeScore ab = rouge_n(seq(a), seq(b), n);
      RougeScore ba = rouge_n(seq(b), seq(a), n);
      EXPECT_EQ(ab.precision, ba.recall);
      EXPECT_EQ(ab.recall, ba.precision);
      EXPECT_EQ(ab.f1, ba.f1);
    }
    RougeScore ab = rouge_l(seq(a), seq(b));
    RougeScore ba = rouge_l(seq(b), seq(a));
    EXPECT_EQ(ab.precision, ba.recall);
    EXPECT_EQ(ab.f1, ba.f1);
  }
}

TEST_F(RougeProperties, MatchesBruteForce) {
  for (int t = 0; t < 500; ++t) {
    auto a = testing::random_tokens(rng_, 8, 4);
    auto b = testing::random_tokens(rng_, 8, 4);
    for (size_t n = 1; n <= 3; ++n) {
      RougeScore got = rouge_n(seq(a), seq(b), n);
      testing::BruteRouge want = testing::brute_rouge_n(a, b, n);
      EXPECT_EQ(got.precision, want.precision);
      EXPECT_EQ(got.recall, want.recall);
      EXPECT_EQ(got.f1, want.f1);
    }
    auto c = testing::random_tokens(rng_, 10, 4);
    auto d = testing::random_tokens(rng_, 10, 4);
    EXPECT_EQ(lcs_length(c, d), testing::brute_lcs(c, d));
  }
}

TEST_F(RougeProperties, AppendingUnseenTokenNeverRaisesRecall) {
  for (int t = 0; t < 300; ++t) {
    auto cand = testing::random_tokens(rng_, 8, 4);
    auto ref = testing::random_tokens(rng_, 8, 4);
    auto longer = ref;
    longer.push_back("zz");  // outside the a-d alphabet
    for (size_t n = 1; n <= 2; ++n) {
      EXPECT_LE(rouge_n(seq(cand), seq(longer), n).recall,
                rouge_n(seq(cand), seq(ref), n).recall);
    }
    EXPECT_LE(rouge_l(seq(cand), seq(longer)).recall,
              rouge_l(seq(cand), seq(ref)).recall);
  }
}

TEST_F(RougeProperties, ScoresStayInUnitInterval) {
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_tokens(rng_, 8, 3);
    auto b = testing::random_tokens(rng_, 8, 3);
    for (const RougeScore& s :
         {rouge_n(seq(a), seq(b), 1), rouge_n(seq(a), seq(b), 2),
          rouge_l(seq(a), seq(b))}) {
      for (double v : {s.precision, s.recall, s.f1}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
      EXPECT_EQ(s.f1, f_measure(s.precision, s.recall));
    }
  }
}

}  // namespace
}  // namespace rdass
