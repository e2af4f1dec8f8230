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

#include <cmath>

#include "rdass/backends.hpp"
#include "rdass/error.hpp"
#include "rdass/random.hpp"
#include "rdass/text.hpp"

namespace rdass {

HashBackend::HashBackend(size_t dim, uint64_t seed) : dim_(dim), seed_(seed) {
  if (dim_ == 0) throw ArgumentError("hash backend dimension must be >= 1");
}

EmbeddingVector HashBackend::token_vector(std::string_view token) const {
  uint64_t state = fnv1a64(token) ^ seed_;
  std::vector<double> values(dim_);
  double squared = 0.0;
  for (double& x : values) {
    x = 2.0 * to_unit_interval(splitmix64(state)) - 1.0;
    squared += x * x;
  }
  if (squared == 0.0) {
    throw DegenerateInputError("hash embedding of \"" + std::string(token) +
                               "\" has zero norm");
  }
  const double norm = std::sqrt(squared);
  for (double& x : values) x /= norm;
  return EmbeddingVector(std::move(values));
}

EmbeddingVector HashBackend::embed_text(std::string_view text) const {
  TokenSequence seq = tokenize(text, TokenizationScheme::word());
  if (seq.empty()) {
    throw ArgumentError("text has no word tokens after normalization");
  }
  std::vector<EmbeddingVector> vectors;
  vectors.reserve(seq.size());
  for (const std::string& token : seq.tokens) {
    vectors.push_back(token_vector(token));
  }
  return mean_pool(vectors);
}

}  // namespace rdass
