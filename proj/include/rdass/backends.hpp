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

// Embedding backends: a seeded hash embedder for tests and offline use, a
// precomputed JSONL vector store, and an HTTP client for an embedding
// service.

#ifndef RDASS_BACKENDS_HPP_
#define RDASS_BACKENDS_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <condition_variable>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdass/embedding.hpp"

namespace rdass {

// ASCII "RDASS-01".
inline constexpr uint64_t kDefaultHashSeed = 0x52444153532d3031ULL;
inline constexpr size_t kDefaultHashDim = 64;

// Word-tokenizes the text, maps each token to a unit vector drawn from a
// SplitMix64 stream seeded with FNV-1a(token) ^ seed, then mean-pools.
// Depends only on the token multiset of the text.
class HashBackend final : public EmbeddingBackend {
 public:
  explicit HashBackend(size_t dim = kDefaultHashDim,
                       uint64_t seed = kDefaultHashSeed);

  size_t dim() const override { return dim_; }
  BackendKind kind() const override { return BackendKind::kDeterministicHash; }

  EmbeddingVector token_vector(std::string_view token) const;

 protected:
  EmbeddingVector embed_text(std::string_view text) const override;

 private:
  size_t dim_;
  uint64_t seed_;
};

// Precomputed vectors keyed by string. Raw-text lookups use the text itself
// as the key; corpus lookups use "<id>:generated|reference|document".
//
// File format is JSON Lines: {"key": "...", "vector": [numbers]} per line.
class FileStoreBackend final : public EmbeddingBackend {
 public:
  using Record = std::pair<std::string, EmbeddingVector>;

  // Throws ConfigError for an unreadable or empty file, mixed dimensions,
  // or duplicate keys; ParseError (with line number) for malformed lines.
  static FileStoreBackend load(const std::filesystem::path& path);
  static FileStoreBackend from_records(std::vector<Record> records);

  size_t dim() const override { return dim_; }
  BackendKind kind() const override { return BackendKind::kFileStore; }
  size_t size() const { return vectors_.size(); }

  // Throws LookupError naming the key.
  const EmbeddingVector& lookup(std::string_view key) const;

  static std::string composite_key(std::string_view id, TextField field);

 protected:
  EmbeddingVector embed_text(std::string_view text) const override;
  std::vector<EmbeddingVector> embed_example(
      std::string_view id, std::span<const FieldText> items) const override;

 private:
  FileStoreBackend() = default;

  size_t dim_ = 0;
  std::unordered_map<std::string, EmbeddingVector> vectors_;
};

// Writes records in the file-store format. Doubles are printed so that they
// parse back to the same bits.
void write_file_store(std::ostream& out,
                      std::span<const FileStoreBackend::Record> records);
void write_file_store(const std::filesystem::path& path,
                      std::span<const FileStoreBackend::Record> records);

struct HttpOptions {
  size_t max_in_flight = 4;
  std::chrono::seconds connect_timeout{5};
  std::chrono::seconds read_timeout{120};
};

// Client for the embedding service:
//   GET  <base>/info  -> {"model": str, "dim": int}
//   POST <base>/embed {"texts": [str]} -> {"vectors": [[num]], "dim": int}
// Queries /info once at construction. At most `max_in_flight` requests run
// concurrently across all callers.
class HttpBackend final : public EmbeddingBackend {
 public:
  // Throws BackendError when the service cannot be reached or its /info
  // response is invalid.
  explicit HttpBackend(std::string url, HttpOptions options = {});

  size_t dim() const override { return dim_; }
  BackendKind kind() const override { return BackendKind::kHttp; }
  const std::string& model() const { return model_; }

  std::vector<EmbeddingVector> embed_batch(
      const std::vector<std::string>& texts) const;

 protected:
  EmbeddingVector embed_text(std::string_view text) const override;
  std::vector<EmbeddingVector> embed_example(
      std::string_view id, std::span<const FieldText> items) const override;

 private:
  class Slot;

  std::string host_;
  std::string prefix_;
  HttpOptions options_;
  size_t dim_ = 0;
  std::string model_;

  mutable std::mutex mu_;
  mutable std::condition_variable slot_free_;
  mutable size_t in_flight_ = 0;
};

// Builds a backend from "hash", "hash:<dim>", "file:<path>" or
// "http:<url>". Throws ArgumentError for an unrecognized spec.
std::unique_ptr<EmbeddingBackend> make_backend(std::string_view spec,
                                               const HttpOptions& http = {});

}  // namespace rdass

#endif  // RDASS_BACKENDS_HPP_
