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

#include <fstream>
#include <ostream>

#include "json.hpp"
#include "rdass/backends.hpp"
#include "rdass/error.hpp"

namespace rdass {

using nlohmann::json;

FileStoreBackend FileStoreBackend::from_records(std::vector<Record> records) {
  if (records.empty()) throw ConfigError("vector store has no records");
  FileStoreBackend store;
  store.dim_ = records.front().second.dim();
  store.vectors_.reserve(records.size());
  for (auto& [key, vector] : records) {
    if (vector.dim() != store.dim_) {
      throw ConfigError("vector store key \"" + key + "\" has dimension " +
                        std::to_string(vector.dim()) + ", expected " +
                        std::to_string(store.dim_));
    }
    if (!store.vectors_.emplace(key, std::move(vector)).second) {
      throw ConfigError("duplicate vector store key \"" + key + "\"");
    }
  }
  return store;
}

FileStoreBackend FileStoreBackend::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read vector store: " + path.string());

  const std::string source = path.string();
  std::vector<Record> records;
  std::unordered_map<std::string, size_t> first_line;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!row.is_object() || !row.contains("key") || !row["key"].is_string() ||
        !row.contains("vector") || !row["vector"].is_array()) {
      throw ParseError(source, line_no,
                       "expected {\"key\": string, \"vector\": [numbers]}");
    }
    std::vector<double> values;
    values.reserve(row["vector"].size());
    for (const json& x : row["vector"]) {
      if (!x.is_number()) {
        throw ParseError(source, line_no, "vector entries must be numbers");
      }
      values.push_back(x.get<double>());
    }
    std::string key = row["key"].get<std::string>();
    auto [it, inserted] = first_line.emplace(key, line_no);
    if (!inserted) {
      throw ConfigError(source + ": duplicate key \"" + key + "\" on lines " +
                        std::to_string(it->second) + " and " +
                        std::to_string(line_no));
    }
    try {
      records.emplace_back(std::move(key), EmbeddingVector(std::move(values)));
    } catch (const ArgumentError& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (records.empty()) {
    throw ConfigError("vector store has no records: " + source);
  }
  try {
    return from_records(std::move(records));
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

const EmbeddingVector& FileStoreBackend::lookup(std::string_view key) const {
  auto it = vectors_.find(std::string(key));
  if (it == vectors_.end()) throw LookupError(std::string(key));
  return it->second;
}

std::string FileStoreBackend::composite_key(std::string_view id,
                                            TextField field) {
  std::string key(id);
  key += ':';
  key += text_field_name(field);
  return key;
}

EmbeddingVector FileStoreBackend::embed_text(std::string_view text) const {
  return lookup(text);
}

std::vector<EmbeddingVector> FileStoreBackend::embed_example(
    std::string_view id, std::span<const FieldText> items) const {
  std::vector<EmbeddingVector> out;
  out.reserve(items.size());
  for (const FieldText& item : items) {
    out.push_back(lookup(composite_key(id, item.field)));
  }
  return out;
}

void write_file_store(std::ostream& out,
                      std::span<const FileStoreBackend::Record> records) {
  for (const auto& [key, vector] : records) {
    json row = json::object();
    row["key"] = key;
    row["vector"] = std::vector<double>(vector.values().begin(),
                                        vector.values().end());
    out << row.dump() << '\n';
  }
}

void write_file_store(const std::filesystem::path& path,
                      std::span<const FileStoreBackend::Record> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write vector store: " + path.string());
  write_file_store(out, records);
  if (!out) throw ConfigError("write failed: " + path.string());
}

}  // namespace rdass
