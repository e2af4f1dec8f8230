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

// Cosine similarity and the reference-and-document-aware semantic score.

#ifndef RDASS_SEMANTIC_HPP_
#define RDASS_SEMANTIC_HPP_

#include <string_view>

#include "rdass/embedding.hpp"

namespace rdass {

enum class Aggregator { kAvg, kSum, kMax, kMin };

Aggregator parse_aggregator(std::string_view name);
std::string_view aggregator_name(Aggregator aggregator);

// Throws ArgumentError on a dimension mismatch and DegenerateInputError when
// either vector has zero norm. The result is clamped to [-1, 1], and
// cosine(v, v) is exactly 1.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

struct SemanticScores {
  double s_pr = 0.0;  // generated vs. reference
  double s_pd = 0.0;  // generated vs. document
  double rdass = 0.0;
  Aggregator aggregator = Aggregator::kAvg;
};

// avg: (s_pr + s_pd) / 2, sum: s_pr + s_pd, max / min: the extremum.
double combine(double s_pr, double s_pd, Aggregator aggregator);

SemanticScores rdass(const EmbeddingVector& generated,
                     const EmbeddingVector& reference,
                     const EmbeddingVector& document,
                     Aggregator aggregator = Aggregator::kAvg);

// Presentation-only rounding to `digits` decimals (half away from zero).
double round_to(double value, int digits);

}  // namespace rdass

#endif  // RDASS_SEMANTIC_HPP_
