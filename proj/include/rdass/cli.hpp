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

// Command-line front end. Lives in a library so tests can drive it
// in-process with captured streams and an injected environment.

#ifndef RDASS_CLI_HPP_
#define RDASS_CLI_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdass/rouge.hpp"
#include "rdass/semantic.hpp"

namespace rdass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string backend = "hash";
  std::string tokenizer = "word";
  RougeVariant rouge_variant = RougeVariant::kF1;
  Aggregator aggregator = Aggregator::kAvg;
  size_t workers = 1;
  uint64_t seed = 0;
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

// Reads the process environment.
EnvLookup process_env();

// Runs one subcommand (score, evaluate, meta, triplet-check) and returns the
// process exit code: 0 success, 1 runtime or data error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env = process_env());

}  // namespace rdass::cli

#endif  // RDASS_CLI_HPP_
