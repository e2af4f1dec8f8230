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

#include <charconv>

#include "rdass/backends.hpp"
#include "rdass/error.hpp"

namespace rdass {

std::unique_ptr<EmbeddingBackend> make_backend(std::string_view spec,
                                               const HttpOptions& http) {
  auto has_prefix = [&](std::string_view prefix) {
    return spec.substr(0, prefix.size()) == prefix;
  };
  if (spec == "hash") return std::make_unique<HashBackend>();
  if (has_prefix("hash:")) {
    std::string_view digits = spec.substr(5);
    size_t dim = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        dim == 0) {
      throw ArgumentError("invalid hash backend dimension in \"" +
                          std::string(spec) + "\"");
    }
    return std::make_unique<HashBackend>(dim);
  }
  if (has_prefix("file:") && spec.size() > 5) {
    return std::make_unique<FileStoreBackend>(
        FileStoreBackend::load(std::string(spec.substr(5))));
  }
  if (has_prefix("http://")) {
    return std::make_unique<HttpBackend>(std::string(spec), http);
  }
  if (has_prefix("http:") && spec.size() > 5) {
    std::string url(spec.substr(5));
    if (url.rfind("http://", 0) != 0) url = "http://" + url;
    return std::make_unique<HttpBackend>(std::move(url), http);
  }
  throw ArgumentError("unknown backend \"" + std::string(spec) +
                      "\" (expected hash, file:<path> or http:<url>)");
}

}  // namespace rdass
