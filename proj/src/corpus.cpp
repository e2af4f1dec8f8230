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

#include "rdass/corpus.hpp"

#include <unordered_map>

#include "rdass/error.hpp"
#include "rdass/random.hpp"
#include "rdass/stats.hpp"

namespace rdass {
namespace {

std::optional<MetricReport> try_evaluate(const EvalExample& example,
                                         const EmbeddingBackend& backend,
                                         const EvaluationConfig& config,
                                         std::string& error) {
  try {
    return evaluate_example(example, backend, config);
  } catch (const std::exception& e) {
    error = e.what();
    return std::nullopt;
  }
}

EvaluationResult collect(const std::vector<EvalExample>& examples,
                         std::vector<std::optional<MetricReport>>& slots,
                         std::vector<std::string>& messages) {
  EvaluationResult result;
  for (size_t i = 0; i < examples.size(); ++i) {
    if (slots[i]) {
      result.reports.push_back(std::move(*slots[i]));
    } else {
      result.errors.push_back({i, examples[i].id, std::move(messages[i])});
    }
  }
  return result;
}

bool is_constant(const std::vector<double>& column) {
  for (double v : column) {
    if (v != column.front()) return false;
  }
  return true;
}

void require_varying(const std::vector<double>& column,
                     std::string_view name) {
  if (is_constant(column)) {
    throw DegenerateInputError("column \"" + std::string(name) +
                               "\" is constant; correlation is undefined");
  }
}

CorrelationTable correlate(const std::vector<std::string>& row_names,
                           const std::vector<std::vector<double>>& rows,
                           const std::vector<std::string>& col_names,
                           const std::vector<std::vector<double>>& cols) {
  CorrelationTable table;
  table.rows = row_names;
  table.cols = col_names;
  table.pearson.assign(rows.size(), std::vector<double>(cols.size()));
  table.kendall.assign(rows.size(), std::vector<double>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      PairedSample sample(rows[i], cols[j]);
      table.pearson[i][j] = pearson(sample);
      table.kendall[i][j] = kendall_tau(sample);
    }
  }
  return table;
}

}  // namespace

MetricReport evaluate_example(const EvalExample& example,
                              const EmbeddingBackend& backend,
                              const EvaluationConfig& config) {
  if (!example.generated) {
    throw ArgumentError("example \"" + example.id +
                        "\" has no generated text");
  }
  const std::string& generated = *example.generated;
  MetricReport report;
  report.id = example.id;

  TokenSequence cand = tokenize(generated, config.scheme);
  TokenSequence ref = tokenize(example.reference, config.scheme);
  report.rouge1 = rouge_n(cand, ref, 1);
  report.rouge2 = rouge_n(cand, ref, 2);
  report.rougeL = rouge_l(cand, ref);

  const FieldText items[] = {{TextField::kGenerated, generated},
                             {TextField::kReference, example.reference},
                             {TextField::kDocument, example.document}};
  std::vector<EmbeddingVector> vectors = backend.embed_fields(example.id, items);
  report.semantic =
      rdass(vectors[0], vectors[1], vectors[2], config.aggregator);
  return report;
}

EvaluationResult evaluate_serial(const std::vector<EvalExample>& examples,
                                 const EmbeddingBackend& backend,
                                 const EvaluationConfig& config) {
  std::vector<std::optional<MetricReport>> slots(examples.size());
  std::vector<std::string> messages(examples.size());
  for (size_t i = 0; i < examples.size(); ++i) {
    slots[i] = try_evaluate(examples[i], backend, config, messages[i]);
  }
  return collect(examples, slots, messages);
}

EvaluationResult evaluate(const std::vector<EvalExample>& examples,
                          const EmbeddingBackend& backend,
                          const EvaluationConfig& config) {
  if (config.workers < 1) throw ArgumentError("workers must be >= 1");
  if (config.workers == 1 || examples.size() < 2) {
    return evaluate_serial(examples, backend, config);
  }
  std::vector<std::optional<MetricReport>> slots(examples.size());
  std::vector<std::string> messages(examples.size());
  const auto n = static_cast<int64_t>(examples.size());
  const int threads = static_cast<int>(
      std::min<size_t>(config.workers, examples.size()));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (int64_t i = 0; i < n; ++i) {
    slots[i] = try_evaluate(examples[i], backend, config, messages[i]);
  }
  return collect(examples, slots, messages);
}

AggregateSummary aggregate(const std::vector<MetricReport>& reports) {
  if (reports.empty()) {
    throw ArgumentError("cannot aggregate an empty report list");
  }
  AggregateSummary summary;
  summary.count = reports.size();
  MetricReport& m = summary.mean;
  m.id = "mean";
  m.semantic.aggregator = reports.front().semantic.aggregator;
  auto add = [](RougeScore& acc, const RougeScore& x) {
    acc.precision += x.precision;
    acc.recall += x.recall;
    acc.f1 += x.f1;
  };
  for (const MetricReport& r : reports) {
    add(m.rouge1, r.rouge1);
    add(m.rouge2, r.rouge2);
    add(m.rougeL, r.rougeL);
    m.semantic.s_pr += r.semantic.s_pr;
    m.semantic.s_pd += r.semantic.s_pd;
    m.semantic.rdass += r.semantic.rdass;
  }
  const double n = static_cast<double>(reports.size());
  for (RougeScore* s : {&m.rouge1, &m.rouge2, &m.rougeL}) {
    s->precision /= n;
    s->recall /= n;
    s->f1 /= n;
  }
  m.semantic.s_pr /= n;
  m.semantic.s_pd /= n;
  m.semantic.rdass /= n;
  return summary;
}

std::string_view metric_column_name(MetricColumn column) {
  switch (column) {
    case MetricColumn::kRouge1:
      return "rouge1";
    case MetricColumn::kRouge2:
      return "rouge2";
    case MetricColumn::kRougeL:
      return "rougeL";
    case MetricColumn::kSpr:
      return "s_pr";
    case MetricColumn::kSpd:
      return "s_pd";
    case MetricColumn::kRdass:
      return "rdass";
  }
  return "unknown";
}

std::string_view human_column_name(HumanColumn column) {
  switch (column) {
    case HumanColumn::kRelevance:
      return "relevance";
    case HumanColumn::kConsistency:
      return "consistency";
    case HumanColumn::kFluency:
      return "fluency";
    case HumanColumn::kHumanAvg:
      return "human_avg";
  }
  return "unknown";
}

double metric_value(const MetricReport& report, MetricColumn column,
                    RougeVariant variant) {
  switch (column) {
    case MetricColumn::kRouge1:
      return select(report.rouge1, variant);
    case MetricColumn::kRouge2:
      return select(report.rouge2, variant);
    case MetricColumn::kRougeL:
      return select(report.rougeL, variant);
    case MetricColumn::kSpr:
      return report.semantic.s_pr;
    case MetricColumn::kSpd:
      return report.semantic.s_pd;
    case MetricColumn::kRdass:
      return report.semantic.rdass;
  }
  return 0.0;
}

double human_value(const HumanJudgment& human, HumanColumn column) {
  switch (column) {
    case HumanColumn::kRelevance:
      return human.relevance;
    case HumanColumn::kConsistency:
      return human.consistency;
    case HumanColumn::kFluency:
      return human.fluency;
    case HumanColumn::kHumanAvg:
      return human.human_avg();
  }
  return 0.0;
}

MetaEvaluation meta_evaluate(const std::vector<MetricReport>& reports,
                             const std::vector<EvalExample>& examples,
                             RougeVariant variant) {
  std::unordered_map<std::string_view, const EvalExample*> by_id;
  for (const EvalExample& e : examples) by_id.emplace(e.id, &e);

  std::vector<const MetricReport*> judged_reports;
  std::vector<const HumanJudgment*> judgments;
  for (const MetricReport& r : reports) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      throw ValidationError("report id \"" + r.id + "\" is not in the corpus");
    }
    if (it->second->human) {
      judged_reports.push_back(&r);
      judgments.push_back(&*it->second->human);
    }
  }
  if (judged_reports.size() < 2) {
    throw ArgumentError("meta-evaluation needs at least 2 reports with human "
                        "judgments, found " +
                        std::to_string(judged_reports.size()));
  }

  std::vector<std::string> metric_names;
  std::vector<std::vector<double>> judged_metrics;
  std::vector<std::vector<double>> all_metrics;
  for (MetricColumn column : kMetricColumns) {
    const std::string name(metric_column_name(column));
    std::vector<double> judged, all;
    for (const MetricReport* r : judged_reports) {
      judged.push_back(metric_value(*r, column, variant));
    }
    for (const MetricReport& r : reports) {
      all.push_back(metric_value(r, column, variant));
    }
    require_varying(judged, name);
    require_varying(all, name);
    metric_names.push_back(name);
    judged_metrics.push_back(std::move(judged));
    all_metrics.push_back(std::move(all));
  }

  std::vector<std::string> human_names;
  std::vector<std::vector<double>> human_columns;
  for (HumanColumn column : kHumanColumns) {
    const std::string name(human_column_name(column));
    std::vector<double> values;
    for (const HumanJudgment* h : judgments) {
      values.push_back(human_value(*h, column));
    }
    require_varying(values, name);
    human_names.push_back(name);
    human_columns.push_back(std::move(values));
  }

  MetaEvaluation meta;
  meta.judged = judged_reports.size();
  meta.vs_human =
      correlate(metric_names, judged_metrics, human_names, human_columns);

  // Upper triangle only, mirrored, so the matrix is symmetric by
  // construction.
  CorrelationTable& mm = meta.vs_metric;
  const size_t k = metric_names.size();
  mm.rows = metric_names;
  mm.cols = metric_names;
  mm.pearson.assign(k, std::vector<double>(k, 1.0));
  mm.kendall.assign(k, std::vector<double>(k, 1.0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      PairedSample sample(all_metrics[i], all_metrics[j]);
      mm.pearson[i][j] = mm.pearson[j][i] = pearson(sample);
      mm.kendall[i][j] = mm.kendall[j][i] = kendall_tau(sample);
    }
  }
  return meta;
}

std::vector<TripletPair> mine_in_batch_triplets(
    const std::vector<EvalExample>& examples, const EmbeddingBackend& backend,
    uint64_t seed, double epsilon) {
  std::vector<size_t> usable;
  for (size_t i = 0; i < examples.size(); ++i) {
    if (examples[i].generated) usable.push_back(i);
  }
  if (usable.size() < 2) {
    throw ArgumentError("in-batch negatives need at least 2 examples with "
                        "generated text");
  }

  struct Vectors {
    EmbeddingVector generated, reference, document;
  };
  std::vector<std::optional<Vectors>> vectors(examples.size());
  for (size_t i : usable) {
    const EvalExample& e = examples[i];
    const FieldText items[] = {{TextField::kGenerated, *e.generated},
                               {TextField::kReference, e.reference},
                               {TextField::kDocument, e.document}};
    auto v = backend.embed_fields(e.id, items);
    vectors[i] = Vectors{std::move(v[0]), std::move(v[1]), std::move(v[2])};
  }

  std::vector<size_t> cycle = usable;
  SeededRng rng(seed);
  rng.shuffle(cycle);
  std::unordered_map<size_t, size_t> negative_of;
  for (size_t k = 0; k < cycle.size(); ++k) {
    negative_of[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }

  std::vector<TripletPair> out;
  out.reserve(usable.size());
  for (size_t i : usable) {
    const size_t neg = negative_of.at(i);
    const Vectors& own = *vectors[i];
    const Vectors& other = *vectors[neg];
    out.push_back(TripletPair{
        examples[i].id, neg,
        TripletBatch(own.generated, own.reference, other.reference, epsilon),
        TripletBatch(own.generated, own.document, other.document, epsilon)});
  }
  return out;
}

}  // namespace rdass
