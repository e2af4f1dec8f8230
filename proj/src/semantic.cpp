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

#include <algorithm>
#include <cmath>
#include <string>

#include "rdass/error.hpp"

namespace rdass {

Aggregator parse_aggregator(std::string_view name) {
  if (name == "avg") return Aggregator::kAvg;
  if (name == "sum") return Aggregator::kSum;
  if (name == "max") return Aggregator::kMax;
  if (name == "min") return Aggregator::kMin;
  throw ArgumentError("unknown aggregator \"" + std::string(name) +
                      "\" (expected avg, sum, max or min)");
}

std::string_view aggregator_name(Aggregator aggregator) {
  switch (aggregator) {
    case Aggregator::kAvg:
      return "avg";
    case Aggregator::kSum:
      return "sum";
    case Aggregator::kMax:
      return "max";
    case Aggregator::kMin:
      return "min";
  }
  return "avg";
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    throw ArgumentError("cosine of vectors with dimensions " +
                        std::to_string(u.dim()) + " and " +
                        std::to_string(v.dim()));
  }
  // Rescale by the largest magnitude so the sums cannot overflow or
  // underflow for any finite input.
  double su = 0.0;
  double sv = 0.0;
  for (size_t i = 0; i < u.dim(); ++i) {
    su = std::max(su, std::abs(u[i]));
    sv = std::max(sv, std::abs(v[i]));
  }
  if (su == 0.0 || sv == 0.0) {
    throw DegenerateInputError("cosine of a zero-norm vector");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (size_t i = 0; i < u.dim(); ++i) {
    const double x = u[i] / su;
    const double y = v[i] / sv;
    dot += x * y;
    uu += x * x;
    vv += y * y;
  }
  // sqrt(uu * vv) keeps cosine(v, v) == 1 exactly, since sqrt(x * x) == x
  // in binary floating point. Both sums lie in [1, dim] after rescaling.
  const double denom = std::sqrt(uu * vv);
  return std::clamp(dot / denom, -1.0, 1.0);
}

double combine(double s_pr, double s_pd, Aggregator aggregator) {
  switch (aggregator) {
    case Aggregator::kAvg:
      return (s_pr + s_pd) / 2.0;
    case Aggregator::kSum:
      return s_pr + s_pd;
    case Aggregator::kMax:
      return std::max(s_pr, s_pd);
    case Aggregator::kMin:
      return std::min(s_pr, s_pd);
  }
  return (s_pr + s_pd) / 2.0;
}

SemanticScores rdass(const EmbeddingVector& generated,
                     const EmbeddingVector& reference,
                     const EmbeddingVector& document, Aggregator aggregator) {
  SemanticScores scores;
  scores.s_pr = cosine(generated, reference);
  scores.s_pd = cosine(generated, document);
  scores.rdass = combine(scores.s_pr, scores.s_pd, aggregator);
  scores.aggregator = aggregator;
  return scores;
}

double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

}  // namespace rdass
