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

#include "httplib.h"
#include "json.hpp"
#include "rdass/backends.hpp"
#include "rdass/error.hpp"

namespace rdass {
namespace {

using nlohmann::json;

std::string excerpt(const std::string& body) {
  constexpr size_t kMax = 200;
  return body.size() <= kMax ? body : body.substr(0, kMax) + "...";
}

}  // namespace

// Holds one of the backend's in-flight request slots.
class HttpBackend::Slot {
 public:
  explicit Slot(const HttpBackend& backend) : backend_(backend) {
    std::unique_lock lock(backend_.mu_);
    backend_.slot_free_.wait(lock, [&] {
      return backend_.in_flight_ < backend_.options_.max_in_flight;
    });
    ++backend_.in_flight_;
  }
  ~Slot() {
    {
      std::lock_guard lock(backend_.mu_);
      --backend_.in_flight_;
    }
    backend_.slot_free_.notify_one();
  }
  Slot(const Slot&) = delete;
  Slot& operator=(const Slot&) = delete;

 private:
  const HttpBackend& backend_;
};

HttpBackend::HttpBackend(std::string url, HttpOptions options)
    : options_(options) {
  if (options_.max_in_flight == 0) {
    throw ArgumentError("max_in_flight must be >= 1");
  }
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw ArgumentError("embedding service URL must start with http://: " +
                        url);
  }
  size_t path_start = url.find('/', kScheme.size());
  host_ = url.substr(0, path_start);
  if (path_start != std::string::npos) prefix_ = url.substr(path_start);
  while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
  if (host_.size() == kScheme.size()) {
    throw ArgumentError("embedding service URL has no host: " + url);
  }

  httplib::Client client(host_);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);
  auto res = client.Get(prefix_ + "/info");
  if (!res) {
    throw BackendError("GET " + host_ + prefix_ +
                       "/info failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw BackendError("GET /info returned HTTP " +
                       std::to_string(res->status) + ": " +
                       excerpt(res->body));
  }
  try {
    json info = json::parse(res->body);
    int64_t dim = info.at("dim").get<int64_t>();
    if (dim <= 0) throw BackendError("service advertises dim <= 0");
    dim_ = static_cast<size_t>(dim);
    if (info.contains("model") && info["model"].is_string()) {
      model_ = info["model"].get<std::string>();
    }
  } catch (const json::exception& e) {
    throw BackendError(std::string("invalid /info response: ") + e.what());
  }
}

std::vector<EmbeddingVector> HttpBackend::embed_batch(
    const std::vector<std::string>& texts) const {
  if (texts.empty()) return {};
  const std::string body = json{{"texts", texts}}.dump();

  httplib::Result res{nullptr, httplib::Error::Unknown};
  {
    Slot slot(*this);
    httplib::Client client(host_);
    client.set_connection_timeout(options_.connect_timeout);
    client.set_read_timeout(options_.read_timeout);
    res = client.Post(prefix_ + "/embed", body, "application/json");
  }
  if (!res) {
    throw BackendError("POST " + host_ + prefix_ +
                       "/embed failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw BackendError("POST /embed returned HTTP " +
                       std::to_string(res->status) + ": " +
                       excerpt(res->body));
  }

  json reply;
  try {
    reply = json::parse(res->body);
  } catch (const json::parse_error& e) {
    throw BackendError(std::string("invalid /embed response: ") + e.what());
  }
  if (!reply.is_object() || !reply.contains("vectors") ||
      !reply["vectors"].is_array()) {
    throw BackendError("/embed response has no \"vectors\" array");
  }
  if (reply.contains("dim") &&
      (!reply["dim"].is_number_integer() ||
       reply["dim"].get<int64_t>() != static_cast<int64_t>(dim_))) {
    throw BackendError("/embed response dim " + reply["dim"].dump() +
                       " does not match /info dim " + std::to_string(dim_));
  }
  const json& vectors = reply["vectors"];
  if (vectors.size() != texts.size()) {
    throw BackendError("/embed returned " + std::to_string(vectors.size()) +
                       " vectors for " + std::to_string(texts.size()) +
                       " texts");
  }

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    const json& row = vectors[i];
    if (!row.is_array() || row.size() != dim_) {
      throw BackendError("dimension mismatch: vector " + std::to_string(i) +
                         " has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(dim_));
    }
    std::vector<double> values;
    values.reserve(dim_);
    for (const json& x : row) {
      if (!x.is_number()) {
        throw BackendError("non-numeric entry in vector " + std::to_string(i));
      }
      values.push_back(x.get<double>());
    }
    try {
      out.emplace_back(std::move(values));
    } catch (const ArgumentError& e) {
      throw BackendError("vector " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

EmbeddingVector HttpBackend::embed_text(std::string_view text) const {
  return embed_batch({std::string(text)}).front();
}

std::vector<EmbeddingVector> HttpBackend::embed_example(
    std::string_view /*id*/, std::span<const FieldText> items) const {
  std::vector<std::string> texts;
  texts.reserve(items.size());
  for (const FieldText& item : items) texts.emplace_back(item.text);
  return embed_batch(texts);
}

}  // namespace rdass
