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

#include "rdass/embedding.hpp"

#include <cmath>
#include <utility>

#include "rdass/error.hpp"
#include "rdass/text.hpp"

namespace rdass {

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw ArgumentError("embedding vector must have dimension >= 1");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ArgumentError("embedding component " + std::to_string(i) +
                          " is not finite");
    }
  }
}

EmbeddingVector EmbeddingVector::zeros(size_t dim) {
  return EmbeddingVector(std::vector<double>(dim, 0.0));
}

EmbeddingVector mean_pool(std::span<const EmbeddingVector> vectors) {
  if (vectors.empty()) throw ArgumentError("cannot pool an empty list");
  const size_t dim = vectors.front().dim();
  std::vector<double> sum(dim, 0.0);
  for (const EmbeddingVector& v : vectors) {
    if (v.dim() != dim) {
      throw ArgumentError("cannot pool vectors of dimension " +
                          std::to_string(dim) + " and " +
                          std::to_string(v.dim()));
    }
    for (size_t j = 0; j < dim; ++j) sum[j] += v[j];
  }
  const double count = static_cast<double>(vectors.size());
  for (double& x : sum) x /= count;
  return EmbeddingVector(std::move(sum));
}

EmbeddingVector pool_anchor(std::span<const EmbeddingVector> hidden_states) {
  return mean_pool(hidden_states);
}

std::string_view backend_kind_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::kFileStore:
      return "file-store";
    case BackendKind::kHttp:
      return "http";
    case BackendKind::kDeterministicHash:
      return "deterministic-hash";
  }
  return "unknown";
}

std::string_view text_field_name(TextField field) {
  switch (field) {
    case TextField::kGenerated:
      return "generated";
    case TextField::kReference:
      return "reference";
    case TextField::kDocument:
      return "document";
  }
  return "unknown";
}

EmbeddingVector EmbeddingBackend::embed(std::string_view text) const {
  if (is_blank(text)) throw ArgumentError("cannot embed empty text");
  return embed_text(text);
}

std::vector<EmbeddingVector> EmbeddingBackend::embed_fields(
    std::string_view id, std::span<const FieldText> items) const {
  for (const FieldText& item : items) {
    if (is_blank(item.text)) {
      throw ArgumentError("cannot embed empty " +
                          std::string(text_field_name(item.field)) + " text");
    }
  }
  return embed_example(id, items);
}

std::vector<EmbeddingVector> EmbeddingBackend::embed_example(
    std::string_view /*id*/, std::span<const FieldText> items) const {
  std::vector<EmbeddingVector> out;
  out.reserve(items.size());
  for (const FieldText& item : items) out.push_back(embed_text(item.text));
  return out;
}

}  // namespace rdass
