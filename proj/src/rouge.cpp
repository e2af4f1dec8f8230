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

#include <algorithm>

#include "rdass/error.hpp"

namespace rdass {

double f_measure(double precision, double recall) {
  double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

RougeScore RougeScore::from_counts(size_t overlap, size_t candidate_total,
                                   size_t reference_total) {
  RougeScore score;
  if (candidate_total > 0) {
    score.precision = static_cast<double>(overlap) / candidate_total;
  }
  if (reference_total > 0) {
    score.recall = static_cast<double>(overlap) / reference_total;
  }
  score.f1 = f_measure(score.precision, score.recall);
  return score;
}

RougeVariant parse_rouge_variant(std::string_view name) {
  if (name == "f1") return RougeVariant::kF1;
  if (name == "recall") return RougeVariant::kRecall;
  if (name == "precision") return RougeVariant::kPrecision;
  throw ArgumentError("unknown ROUGE variant \"" + std::string(name) +
                      "\" (expected f1, recall or precision)");
}

std::string_view rouge_variant_name(RougeVariant variant) {
  switch (variant) {
    case RougeVariant::kF1:
      return "f1";
    case RougeVariant::kRecall:
      return "recall";
    case RougeVariant::kPrecision:
      return "precision";
  }
  return "f1";
}

double select(const RougeScore& score, RougeVariant variant) {
  switch (variant) {
    case RougeVariant::kF1:
      return score.f1;
    case RougeVariant::kRecall:
      return score.recall;
    case RougeVariant::kPrecision:
      return score.precision;
  }
  return score.f1;
}

RougeScore rouge_n(const TokenSequence& candidate,
                   const TokenSequence& reference, size_t n) {
  if (n < 1) throw ArgumentError("ROUGE-N order must be >= 1");
  NgramMultiset cand = ngrams(candidate, n);
  NgramMultiset ref = ngrams(reference, n);

  // Both maps are ordered by key, so a merge walk finds the intersection.
  size_t overlap = 0;
  auto c = cand.counts.begin();
  auto r = ref.counts.begin();
  while (c != cand.counts.end() && r != ref.counts.end()) {
    if (c->first < r->first) {
      ++c;
    } else if (r->first < c->first) {
      ++r;
    } else {
      overlap += std::min(c->second, r->second);
      ++c;
      ++r;
    }
  }
  return RougeScore::from_counts(overlap, cand.total(), ref.total());
}

size_t lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
  const auto& outer = a.size() >= b.size() ? a : b;
  const auto& inner = a.size() >= b.size() ? b : a;
  std::vector<size_t> prev(inner.size() + 1, 0);
  std::vector<size_t> cur(inner.size() + 1, 0);
  for (const std::string& x : outer) {
    for (size_t j = 1; j <= inner.size(); ++j) {
      cur[j] = x == inner[j - 1] ? prev[j - 1] + 1
                                 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[inner.size()];
}

RougeScore rouge_l(const TokenSequence& candidate,
                   const TokenSequence& reference) {
  size_t lcs = lcs_length(candidate.tokens, reference.tokens);
  return RougeScore::from_counts(lcs, candidate.size(), reference.size());
}

}  // namespace rdass
