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

#include "rdass/semantic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rdass/error.hpp"

namespace rdass {
namespace {

TEST(Cosine, Examples) {
  EXPECT_EQ(cosine({1, 0}, {1, 0}), 1.0);
  EXPECT_EQ(cosine({1, 0}, {0, 1}), 0.0);
  EXPECT_NEAR(cosine({1, 0}, {1, 1}), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(cosine({1, 0}, {-3, 0}), -1.0);
}

TEST(Cosine, Errors) {
  EXPECT_THROW(cosine({0, 0}, {1, 0}), DegenerateInputError);
  EXPECT_THROW(cosine({1, 0}, {0, 0}), DegenerateInputError);
  EXPECT_THROW(cosine({1, 0}, {1, 0, 0}), ArgumentError);
}

TEST(Cosine, SelfSimilarityIsExactlyOne) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    EmbeddingVector v(testing::random_vector(rng, 1 + t % 64, -100, 100));
    EXPECT_EQ(cosine(v, v), 1.0);
  }
  EmbeddingVector huge({1e200, -3e200});
  EXPECT_EQ(cosine(huge, huge), 1.0);
  EmbeddingVector tiny({1e-200, 2e-200});
  EXPECT_NEAR(cosine(tiny, tiny), 1.0, 1e-15);
}

TEST(Cosine, BoundsSymmetryAndScaleInvariance) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int t = 0; t < 2000; ++t) {
    EmbeddingVector u(testing::random_vector(rng, 8));
    EmbeddingVector v(testing::random_vector(rng, 8));
    double c = cosine(u, v);
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
    EXPECT_EQ(c, cosine(v, u));
    double a = scale(rng), b = scale(rng);
    std::vector<double> au(u.values().begin(), u.values().end());
    std::vector<double> bv(v.values().begin(), v.values().end());
    for (double& x : au) x *= a;
    for (double& x : bv) x *= b;
    EXPECT_NEAR(cosine(EmbeddingVector(au), EmbeddingVector(bv)), c, 1e-12);
  }
}

TEST(Combine, AggregatorArithmetic) {
  EXPECT_DOUBLE_EQ(combine(0.8, 0.2, Aggregator::kAvg), 0.5);
  EXPECT_DOUBLE_EQ(combine(0.8, 0.2, Aggregator::kSum), 1.0);
  EXPECT_EQ(combine(0.8, 0.2, Aggregator::kMax), 0.8);
  EXPECT_EQ(combine(0.8, 0.2, Aggregator::kMin), 0.2);
}

TEST(Combine, ParseNames) {
  for (auto a : {Aggregator::kAvg, Aggregator::kSum, Aggregator::kMax,
                 Aggregator::kMin}) {
    EXPECT_EQ(parse_aggregator(aggregator_name(a)), a);
  }
  EXPECT_THROW(parse_aggregator("mean"), ArgumentError);
}

TEST(Rdass, ReferenceRowOfPerformanceTable) {
  // Reference summary row: s(p,r) = 1.00, s(p,d) = 0.55, RDASS = 0.78.
  const double s_pd = 0.55;
  EmbeddingVector p({1, 0});
  EmbeddingVector d({s_pd, std::sqrt(1 - s_pd * s_pd)});
  SemanticScores s = rdass(p, p, d);
  EXPECT_EQ(s.s_pr, 1.0);
  EXPECT_NEAR(s.s_pd, 0.55, 1e-15);
  EXPECT_NEAR(s.rdass, 0.775, 1e-12);
  EXPECT_EQ(round_to(combine(1.0, 0.55, Aggregator::kAvg), 2), 0.78);
  EXPECT_EQ(s.aggregator, Aggregator::kAvg);
}

TEST(Rdass, IdenticalInputs) {
  EmbeddingVector v({0.3, -0.4, 1.2});
  for (auto a : {Aggregator::kAvg, Aggregator::kMax, Aggregator::kMin}) {
    SemanticScores s = rdass(v, v, v, a);
    EXPECT_EQ(s.s_pr, 1.0);
    EXPECT_EQ(s.s_pd, 1.0);
    EXPECT_EQ(s.rdass, 1.0);
  }
  EXPECT_EQ(rdass(v, v, v, Aggregator::kSum).rdass, 2.0);
}

TEST(Rdass, AvgIsMidpointOfMaxAndMin) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    EmbeddingVector p(testing::random_vector(rng, 6));
    EmbeddingVector r(testing::random_vector(rng, 6));
    EmbeddingVector d(testing::random_vector(rng, 6));
    SemanticScores avg = rdass(p, r, d, Aggregator::kAvg);
    double hi = rdass(p, r, d, Aggregator::kMax).rdass;
    double lo = rdass(p, r, d, Aggregator::kMin).rdass;
    EXPECT_NEAR(avg.rdass, (hi + lo) / 2, 1e-15);
    EXPECT_GE(avg.rdass, -1.0);
    EXPECT_LE(avg.rdass, 1.0);
    EXPECT_EQ(avg.s_pr, cosine(r, p));
  }
}

TEST(Rdass, PropagatesDegenerateInput) {
  EXPECT_THROW(rdass({1, 0}, {1, 0}, {0, 0}), DegenerateInputError);
}

TEST(RoundTo, PresentationRounding) {
  EXPECT_EQ(round_to(0.775, 2), 0.78);
  EXPECT_EQ(round_to(0.4449, 2), 0.44);
  EXPECT_EQ(round_to(-0.125, 1), -0.1);
}

}  // namespace
}  // namespace rdass
