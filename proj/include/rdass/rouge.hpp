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

// ROUGE-N and ROUGE-L with clipped (multiset) overlap and a balanced
// F-measure. Every zero denominator yields 0, so empty candidates and
// references score 0 instead of failing.

#ifndef RDASS_ROUGE_HPP_
#define RDASS_ROUGE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rdass/text.hpp"

namespace rdass {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static RougeScore from_counts(size_t overlap, size_t candidate_total,
                                size_t reference_total);
};

// Harmonic mean, 0 when p + r == 0.
double f_measure(double precision, double recall);

enum class RougeVariant { kF1, kRecall, kPrecision };

RougeVariant parse_rouge_variant(std::string_view name);
std::string_view rouge_variant_name(RougeVariant variant);
double select(const RougeScore& score, RougeVariant variant);

// Throws ArgumentError when n < 1.
RougeScore rouge_n(const TokenSequence& candidate,
                   const TokenSequence& reference, size_t n);

RougeScore rouge_l(const TokenSequence& candidate,
                   const TokenSequence& reference);

// O(|a|·|b|) time, O(min(|a|,|b|)) memory.
size_t lcs_length(const std::vector<std::string>& a,
                  const std::vector<std::string>& b);

}  // namespace rdass

#endif  // RDASS_ROUGE_HPP_
