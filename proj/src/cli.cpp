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

#include "rdass/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdass/backends.hpp"
#include "rdass/corpus.hpp"
#include "rdass/error.hpp"
#include "rdass/text.hpp"
#include "rdass/triplet.hpp"

namespace rdass::cli {
namespace {

using nlohmann::json;

// A bad flag, environment or config value. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string backend;
  std::string tokenizer;
  std::string rouge_variant;
  std::string aggregator;
  std::string workers;
  std::string seed;
  std::string config;
  CLI::Option* backend_opt = nullptr;
  CLI::Option* tokenizer_opt = nullptr;
  CLI::Option* rouge_variant_opt = nullptr;
  CLI::Option* aggregator_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* config_opt = nullptr;
};

void add_common(CLI::App& sub, CommonFlags& f) {
  f.backend_opt = sub.add_option(
      "--backend", f.backend, "hash | hash:<dim> | file:<path> | http:<url>");
  f.tokenizer_opt = sub.add_option("--tokenizer", f.tokenizer,
                                   "word | char | subword:<vocab path>");
  f.rouge_variant_opt = sub.add_option("--rouge-variant", f.rouge_variant,
                                       "f1 | recall | precision");
  f.aggregator_opt =
      sub.add_option("--aggregator", f.aggregator, "avg | sum | max | min");
  f.workers_opt = sub.add_option("--workers", f.workers, "worker threads");
  f.seed_opt = sub.add_option("--seed", f.seed, "64-bit unsigned seed");
  f.config_opt = sub.add_option("--config", f.config, "JSON config file");
}

uint64_t parse_u64(std::string_view text, std::string_view what) {
  uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": expected an unsigned integer, got \"" +
                     std::string(text) + "\"");
  }
  return value;
}

size_t parse_workers(std::string_view text, std::string_view what) {
  uint64_t v = parse_u64(text, what);
  if (v < 1) throw UsageError(std::string(what) + ": must be >= 1");
  return static_cast<size_t>(v);
}

// Loads --config as a flat JSON object of strings/numbers keyed like the
// flags with underscores (rouge_variant, ...).
json load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file: " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!cfg.is_object()) {
    throw ConfigError("config file " + path + " must hold a JSON object");
  }
  return cfg;
}

std::optional<std::string> config_value(const json& cfg, const char* key) {
  if (!cfg.contains(key) || cfg[key].is_null()) return std::nullopt;
  const json& v = cfg[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  throw UsageError(std::string("config key \"") + key +
                   "\" must be a string or an integer");
}

// Flags > environment > config file > built-in default.
RunConfig resolve(const CommonFlags& f, const EnvLookup& env) {
  json cfg = json::object();
  if (f.config_opt->count() > 0) cfg = load_config_file(f.config);

  auto pick = [&](CLI::Option* opt, const std::string& flag_value,
                  const char* env_name,
                  const char* key) -> std::optional<std::string> {
    if (opt->count() > 0) return flag_value;
    if (env_name != nullptr) {
      if (auto v = env(env_name)) return v;
    }
    return config_value(cfg, key);
  };

  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  if (auto v = pick(f.backend_opt, f.backend, "RDASS_BACKEND", "backend")) {
    config.backend = *v;
  }
  if (auto v = pick(f.tokenizer_opt, f.tokenizer, nullptr, "tokenizer")) {
    config.tokenizer = *v;
  }
  try {
    if (auto v = pick(f.rouge_variant_opt, f.rouge_variant, nullptr,
                      "rouge_variant")) {
      config.rouge_variant = parse_rouge_variant(*v);
    }
    if (auto v = pick(f.aggregator_opt, f.aggregator, nullptr, "aggregator")) {
      config.aggregator = parse_aggregator(*v);
    }
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  if (auto v = pick(f.workers_opt, f.workers, "RDASS_WORKERS", "workers")) {
    config.workers = parse_workers(*v, "workers");
  }
  if (auto v = pick(f.seed_opt, f.seed, "RDASS_SEED", "seed")) {
    config.seed = parse_u64(*v, "seed");
  }
  return config;
}

// Bad spec strings are usage errors; unreadable files and unreachable
// services are runtime errors.
std::unique_ptr<EmbeddingBackend> open_backend(const RunConfig& config) {
  HttpOptions http;
  http.max_in_flight = config.workers;
  try {
    return make_backend(config.backend, http);
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
}

TokenizationScheme open_tokenizer(const RunConfig& config) {
  try {
    return TokenizationScheme::parse(config.tokenizer);
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `out` when path is "-".
void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write " + path);
  file << content;
  if (!file) throw ConfigError("write failed: " + path);
}

struct TextArg {
  std::string text;
  std::string file;
  CLI::Option* text_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void add(CLI::App& sub, const std::string& name) {
    text_opt = sub.add_option("--" + name, text, name + " text");
    file_opt = sub.add_option("--" + name + "-file", file,
                              "read " + name + " text from a file");
    text_opt->excludes(file_opt);
  }

  std::string get(const std::string& name) const {
    if (text_opt->count() > 0) return text;
    if (file_opt->count() > 0) return read_file(file);
    throw UsageError("--" + name + " or --" + name + "-file is required");
  }
};

struct ScoreCommand {
  CommonFlags flags;
  TextArg document, reference, generated;
  std::string id = "example";

  void add(CLI::App& app) {
    CLI::App* sub =
        app.add_subcommand("score", "Score one generated summary");
    add_common(*sub, flags);
    document.add(*sub, "document");
    reference.add(*sub, "reference");
    generated.add(*sub, "generated");
    sub->add_option("--id", id,
                    "example id; file-store keys are <id>:<field>")
        ->capture_default_str();
  }

  int run(std::ostream& out, const EnvLookup& env) const {
    EvalExample example;
    example.id = id;
    example.generated = generated.get("generated");
    example.reference = reference.get("reference");
    example.document = document.get("document");
    RunConfig config = resolve(flags, env);
    EvaluationConfig eval;
    eval.scheme = open_tokenizer(config);
    eval.aggregator = config.aggregator;
    auto backend = open_backend(config);
    out << report_to_json(evaluate_example(example, *backend, eval)) << '\n';
    return kExitOk;
  }
};

struct EvaluateCommand {
  CommonFlags flags;
  std::string input;
  std::string output;

  void add(CLI::App& app) {
    CLI::App* sub = app.add_subcommand(
        "evaluate", "Score a JSONL corpus and write one report per line");
    add_common(*sub, flags);
    sub->add_option("--input", input, "corpus JSONL")->required();
    sub->add_option("--output", output, "report JSONL ('-' for stdout)")
        ->required();
  }

  int run(std::ostream& out, std::ostream& err, const EnvLookup& env) const {
    RunConfig config = resolve(flags, env);
    EvaluationConfig eval;
    eval.scheme = open_tokenizer(config);
    eval.aggregator = config.aggregator;
    eval.workers = config.workers;
    auto backend = open_backend(config);
    std::vector<EvalExample> examples = load_corpus(input);

    EvaluationResult result = evaluate(examples, *backend, eval);
    std::ostringstream reports;
    write_reports(reports, result.reports);
    write_output(output, reports.str(), out);

    for (const ExampleError& e : result.errors) {
      err << "error: example " << e.index << " (" << e.id
          << "): " << e.message << '\n';
    }
    if (result.reports.empty()) {
      err << "error: no example could be scored (" << result.errors.size()
          << " failed)\n";
      return kExitFailure;
    }
    if (output != "-") {
      out << summary_to_json(aggregate(result.reports), config.rouge_variant,
                             result.errors)
          << '\n';
    }
    return kExitOk;
  }
};

struct MetaCommand {
  CommonFlags flags;
  std::string reports;
  std::string input;
  std::string output;

  void add(CLI::App& app) {
    CLI::App* sub = app.add_subcommand(
        "meta", "Correlate report metrics with human judgments");
    add_common(*sub, flags);
    sub->add_option("--reports", reports, "report JSONL from evaluate")
        ->required();
    sub->add_option("--input", input, "corpus JSONL with human scores")
        ->required();
    sub->add_option("--output", output, "correlation JSON ('-' for stdout)")
        ->required();
  }

  int run(std::ostream& out, const EnvLookup& env) const {
    RunConfig config = resolve(flags, env);
    MetaEvaluation meta = meta_evaluate(load_reports(reports),
                                        load_corpus(input),
                                        config.rouge_variant);
    write_output(output, meta_to_json(meta, config.rouge_variant) + "\n", out);
    return kExitOk;
  }
};

struct TripletCheckCommand {
  size_t dim = 8;
  size_t trials = 1000;
  double epsilon = kDefaultMargin;
  std::string seed;
  CLI::Option* seed_opt = nullptr;

  void add(CLI::App& app) {
    CLI::App* sub = app.add_subcommand(
        "triplet-check",
        "Check triplet-loss gradients against finite differences");
    sub->add_option("--dim", dim, "vector dimension")
        ->check(CLI::Range(size_t{1}, size_t{1} << 20))
        ->capture_default_str();
    sub->add_option("--trials", trials, "active-hinge batches to check")
        ->check(CLI::Range(size_t{1}, size_t{1} << 30))
        ->capture_default_str();
    sub->add_option("--epsilon", epsilon, "margin")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    seed_opt = sub->add_option("--seed", seed, "64-bit unsigned seed");
  }

  int run(std::ostream& out, const EnvLookup& env) const {
    GradientCheckOptions options;
    options.dim = dim;
    options.trials = trials;
    options.epsilon = epsilon;
    if (seed_opt->count() > 0) {
      options.seed = parse_u64(seed, "seed");
    } else if (auto v = env("RDASS_SEED")) {
      options.seed = parse_u64(*v, "RDASS_SEED");
    }
    GradientCheckReport report = check_gradients(options);
    out << "dim " << options.dim << ", seed " << options.seed
        << ", step " << options.step << ", tolerance " << options.tolerance
        << '\n';
    out << "trials " << report.trials << ", passed " << report.passed
        << ", redrawn " << report.redrawn << '\n';
    out << "max relative error " << report.max_relative_error
        << " (trial " << report.worst_trial << ")\n";
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
    return report.ok() ? kExitOk : kExitFailure;
  }
};

}  // namespace

EnvLookup process_env() {
  return [](std::string_view name) -> std::optional<std::string> {
    const char* v = std::getenv(std::string(name).c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Summary evaluation with ROUGE and RDASS", "rdass"};
  app.require_subcommand(1);
  ScoreCommand score;
  EvaluateCommand evaluate_cmd;
  MetaCommand meta;
  TripletCheckCommand triplet;
  score.add(app);
  evaluate_cmd.add(app);
  meta.add(app);
  triplet.add(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n"
        << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("score")) return score.run(out, env);
    if (app.got_subcommand("evaluate")) {
      return evaluate_cmd.run(out, err, env);
    }
    if (app.got_subcommand("meta")) return meta.run(out, env);
    if (app.got_subcommand("triplet-check")) return triplet.run(out, env);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rdass::cli
