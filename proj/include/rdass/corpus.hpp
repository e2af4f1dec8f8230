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

// Corpus data model, per-example evaluation and meta-evaluation against
// human judgments.

#ifndef RDASS_CORPUS_HPP_
#define RDASS_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdass/embedding.hpp"
#include "rdass/rouge.hpp"
#include "rdass/semantic.hpp"
#include "rdass/text.hpp"
#include "rdass/triplet.hpp"

namespace rdass {

// Relevance, consistency and fluency, each on a 1-5 scale.
struct HumanJudgment {
  double relevance = 0.0;
  double consistency = 0.0;
  double fluency = 0.0;

  double human_avg() const { return (relevance + consistency + fluency) / 3.0; }
};

struct EvalExample {
  std::string id;
  std::string document;
  std::string reference;
  std::optional<std::string> generated;
  std::optional<HumanJudgment> human;
};

// Reads JSON Lines with fields id, document, reference, generated and
// human{relevance, consistency, fluency}. Blank lines are skipped.
// Throws ParseError for malformed lines and ValidationError for duplicate
// ids, empty document/reference text or out-of-range human scores.
std::vector<EvalExample> load_corpus(const std::filesystem::path& path);
std::vector<EvalExample> parse_corpus(std::istream& in,
                                      const std::string& source);

struct MetricReport {
  std::string id;
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
  SemanticScores semantic;
};

struct EvaluationConfig {
  TokenizationScheme scheme = TokenizationScheme::word();
  Aggregator aggregator = Aggregator::kAvg;
  size_t workers = 1;
};

struct ExampleError {
  size_t index = 0;
  std::string id;
  std::string message;
};

struct EvaluationResult {
  std::vector<MetricReport> reports;  // input order
  std::vector<ExampleError> errors;   // input order
};

// Scores one example. Throws ArgumentError when it has no generated text
// and propagates backend errors.
MetricReport evaluate_example(const EvalExample& example,
                              const EmbeddingBackend& backend,
                              const EvaluationConfig& config);

// Scores every example on up to `config.workers` OpenMP threads. Failures
// are collected per example and the run continues. Output order matches
// input order and does not depend on the worker count.
EvaluationResult evaluate(const std::vector<EvalExample>& examples,
                          const EmbeddingBackend& backend,
                          const EvaluationConfig& config);

// Single-threaded reference for evaluate(); kept for tests and benchmarks.
EvaluationResult evaluate_serial(const std::vector<EvalExample>& examples,
                                 const EmbeddingBackend& backend,
                                 const EvaluationConfig& config);

struct AggregateSummary {
  size_t count = 0;
  MetricReport mean;  // id is "mean"
};

// Column-wise arithmetic mean. Throws ArgumentError on an empty list.
AggregateSummary aggregate(const std::vector<MetricReport>& reports);

enum class MetricColumn { kRouge1, kRouge2, kRougeL, kSpr, kSpd, kRdass };
enum class HumanColumn { kRelevance, kConsistency, kFluency, kHumanAvg };

inline constexpr std::array<MetricColumn, 6> kMetricColumns = {
    MetricColumn::kRouge1, MetricColumn::kRouge2, MetricColumn::kRougeL,
    MetricColumn::kSpr,    MetricColumn::kSpd,    MetricColumn::kRdass};
inline constexpr std::array<HumanColumn, 4> kHumanColumns = {
    HumanColumn::kRelevance, HumanColumn::kConsistency, HumanColumn::kFluency,
    HumanColumn::kHumanAvg};

std::string_view metric_column_name(MetricColumn column);
std::string_view human_column_name(HumanColumn column);
double metric_value(const MetricReport& report, MetricColumn column,
                    RougeVariant variant = RougeVariant::kF1);
double human_value(const HumanJudgment& human, HumanColumn column);

struct CorrelationTable {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<double>> pearson;  // rows x cols
  std::vector<std::vector<double>> kendall;  // rows x cols
};

struct MetaEvaluation {
  CorrelationTable vs_human;   // metrics x {relevance, ..., human_avg}
  CorrelationTable vs_metric;  // metrics x metrics, over every report
  size_t judged = 0;
};

// Joins reports to examples by id. Throws ValidationError when a report id
// is missing from the corpus, ArgumentError when fewer than two reports
// have human judgments, and DegenerateInputError naming any constant
// column.
MetaEvaluation meta_evaluate(const std::vector<MetricReport>& reports,
                             const std::vector<EvalExample>& examples,
                             RougeVariant variant = RougeVariant::kF1);

// In-batch negatives: examples with generated text are shuffled with the
// seed and each one takes the reference and document of its successor in
// the shuffled cycle, so no example is its own negative.
struct TripletPair {
  std::string id;
  size_t negative_index = 0;  // index into the input list
  TripletBatch ref_batch;
  TripletBatch doc_batch;
};

// Throws ArgumentError with fewer than two usable examples.
std::vector<TripletPair> mine_in_batch_triplets(
    const std::vector<EvalExample>& examples, const EmbeddingBackend& backend,
    uint64_t seed, double epsilon = kDefaultMargin);

// Report and summary serialization. Field names are stable.
std::string report_to_json(const MetricReport& report);
MetricReport report_from_json(std::string_view line);
void write_reports(std::ostream& out, const std::vector<MetricReport>& reports);
std::vector<MetricReport> load_reports(const std::filesystem::path& path);
std::string summary_to_json(const AggregateSummary& summary,
                            RougeVariant variant,
                            const std::vector<ExampleError>& errors);
std::string meta_to_json(const MetaEvaluation& meta, RougeVariant variant);

}  // namespace rdass

#endif  // RDASS_CORPUS_HPP_
