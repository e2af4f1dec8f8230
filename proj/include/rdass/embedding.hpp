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

#ifndef RDASS_EMBEDDING_HPP_
#define RDASS_EMBEDDING_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rdass {

// Fixed-dimension vector of finite doubles.
class EmbeddingVector {
 public:
  // Throws ArgumentError on an empty or non-finite input.
  explicit EmbeddingVector(std::vector<double> values);
  EmbeddingVector(std::initializer_list<double> values)
      : EmbeddingVector(std::vector<double>(values)) {}

  static EmbeddingVector zeros(size_t dim);

  size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](size_t i) const { return values_[i]; }

  bool operator==(const EmbeddingVector&) const = default;

 private:
  std::vector<double> values_;
};

// Component-wise arithmetic mean. Throws ArgumentError on an empty list or
// mixed dimensions. Summation runs in list order, so results are
// reproducible bit for bit; permutations agree up to rounding.
EmbeddingVector mean_pool(std::span<const EmbeddingVector> vectors);

// Reduces a decoder hidden-state sequence to one anchor vector before it is
// compared against single sentence vectors. Same contract as mean_pool.
EmbeddingVector pool_anchor(std::span<const EmbeddingVector> hidden_states);

enum class BackendKind { kFileStore, kHttp, kDeterministicHash };
enum class TextField { kGenerated, kReference, kDocument };

std::string_view backend_kind_name(BackendKind kind);
std::string_view text_field_name(TextField field);

struct FieldText {
  TextField field;
  std::string_view text;
};

// Source of sentence vectors. Implementations must be safe to share across
// threads and must return identical vectors for identical inputs.
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;

  virtual size_t dim() const = 0;
  virtual BackendKind kind() const = 0;

  // Throws ArgumentError when the text is blank.
  EmbeddingVector embed(std::string_view text) const;

  // Embeds the texts of one corpus example. Raw-text backends ignore the
  // id; the file store looks vectors up as "<id>:<field>".
  std::vector<EmbeddingVector> embed_fields(
      std::string_view id, std::span<const FieldText> items) const;

 protected:
  virtual EmbeddingVector embed_text(std::string_view text) const = 0;
  virtual std::vector<EmbeddingVector> embed_example(
      std::string_view id, std::span<const FieldText> items) const;
};

}  // namespace rdass

#endif  // RDASS_EMBEDDING_HPP_
