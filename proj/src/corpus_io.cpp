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
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "rdass/corpus.hpp"
#include "rdass/error.hpp"

namespace rdass {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string required_text(const json& row, const char* field,
                          const std::string& where) {
  if (!row.contains(field) || !row[field].is_string()) {
    throw ValidationError(where + ": field \"" + field +
                          "\" must be a string");
  }
  std::string value = row[field].get<std::string>();
  if (value.empty()) {
    throw ValidationError(where + ": field \"" + field + "\" is empty");
  }
  return value;
}

double human_score(const json& human, const char* field,
                   const std::string& where) {
  if (!human.contains(field) || !human[field].is_number()) {
    throw ValidationError(where + ": human." + field + " must be a number");
  }
  double v = human[field].get<double>();
  if (!(v >= 1.0 && v <= 5.0)) {
    throw ValidationError(where + ": human." + field + " = " +
                          human[field].dump() + " is outside [1, 5]");
  }
  return v;
}

void put_rouge(ordered_json& out, const char* prefix, const RougeScore& s) {
  const std::string p(prefix);
  out[p + "_p"] = s.precision;
  out[p + "_r"] = s.recall;
  out[p + "_f1"] = s.f1;
}

RougeScore get_rouge(const json& in, const char* prefix) {
  const std::string p(prefix);
  RougeScore s;
  s.precision = in.at(p + "_p").get<double>();
  s.recall = in.at(p + "_r").get<double>();
  s.f1 = in.at(p + "_f1").get<double>();
  return s;
}

ordered_json report_json(const MetricReport& r) {
  ordered_json out;
  out["id"] = r.id;
  put_rouge(out, "rouge1", r.rouge1);
  put_rouge(out, "rouge2", r.rouge2);
  put_rouge(out, "rougeL", r.rougeL);
  out["s_pr"] = r.semantic.s_pr;
  out["s_pd"] = r.semantic.s_pd;
  out["rdass"] = r.semantic.rdass;
  out["aggregator"] = aggregator_name(r.semantic.aggregator);
  return out;
}

ordered_json matrix_json(const CorrelationTable& table,
                         const std::vector<std::vector<double>>& values) {
  ordered_json out = ordered_json::object();
  for (size_t i = 0; i < table.rows.size(); ++i) {
    ordered_json row = ordered_json::object();
    for (size_t j = 0; j < table.cols.size(); ++j) {
      row[table.cols[j]] = values[i][j];
    }
    out[table.rows[i]] = std::move(row);
  }
  return out;
}

}  // namespace

std::vector<EvalExample> parse_corpus(std::istream& in,
                                      const std::string& source) {
  std::vector<EvalExample> examples;
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
    if (!row.is_object()) {
      throw ParseError(source, line_no, "expected a JSON object");
    }
    const std::string where = source + ":" + std::to_string(line_no);

    EvalExample example;
    example.id = required_text(row, "id", where);
    example.document = required_text(row, "document", where);
    example.reference = required_text(row, "reference", where);
    if (row.contains("generated") && !row["generated"].is_null()) {
      if (!row["generated"].is_string()) {
        throw ValidationError(where + ": field \"generated\" must be a string");
      }
      example.generated = row["generated"].get<std::string>();
    }
    if (row.contains("human") && !row["human"].is_null()) {
      const json& h = row["human"];
      if (!h.is_object()) {
        throw ValidationError(where + ": field \"human\" must be an object");
      }
      example.human = HumanJudgment{human_score(h, "relevance", where),
                                    human_score(h, "consistency", where),
                                    human_score(h, "fluency", where)};
    }

    auto [it, inserted] = first_line.emplace(example.id, line_no);
    if (!inserted) {
      throw ValidationError(source + ": duplicate id \"" + example.id +
                            "\" on lines " + std::to_string(it->second) +
                            " and " + std::to_string(line_no));
    }
    examples.push_back(std::move(example));
  }
  return examples;
}

std::vector<EvalExample> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read corpus: " + path.string());
  return parse_corpus(in, path.string());
}

std::string report_to_json(const MetricReport& report) {
  return report_json(report).dump();
}

MetricReport report_from_json(std::string_view line) {
  json in = json::parse(line);
  MetricReport r;
  r.id = in.at("id").get<std::string>();
  r.rouge1 = get_rouge(in, "rouge1");
  r.rouge2 = get_rouge(in, "rouge2");
  r.rougeL = get_rouge(in, "rougeL");
  r.semantic.s_pr = in.at("s_pr").get<double>();
  r.semantic.s_pd = in.at("s_pd").get<double>();
  r.semantic.rdass = in.at("rdass").get<double>();
  if (in.contains("aggregator")) {
    r.semantic.aggregator =
        parse_aggregator(in["aggregator"].get<std::string>());
  }
  return r;
}

void write_reports(std::ostream& out,
                   const std::vector<MetricReport>& reports) {
  for (const MetricReport& r : reports) out << report_to_json(r) << '\n';
}

std::vector<MetricReport> load_reports(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read reports: " + path.string());
  std::vector<MetricReport> reports;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      reports.push_back(report_from_json(line));
    } catch (const json::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    } catch (const ArgumentError& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
  return reports;
}

std::string summary_to_json(const AggregateSummary& summary,
                            RougeVariant variant,
                            const std::vector<ExampleError>& errors) {
  const MetricReport& m = summary.mean;
  ordered_json out;
  out["count"] = summary.count;
  out["errors"] = errors.size();
  out["rouge_variant"] = rouge_variant_name(variant);
  out["aggregator"] = aggregator_name(m.semantic.aggregator);
  out["s_pr"] = m.semantic.s_pr;
  out["s_pd"] = m.semantic.s_pd;
  out["rdass"] = m.semantic.rdass;
  out["rouge1"] = select(m.rouge1, variant);
  out["rouge2"] = select(m.rouge2, variant);
  out["rougeL"] = select(m.rougeL, variant);
  ordered_json failed = ordered_json::array();
  for (const ExampleError& e : errors) {
    failed.push_back(
        ordered_json{{"index", e.index}, {"id", e.id}, {"error", e.message}});
  }
  out["failed"] = std::move(failed);
  return out.dump();
}

std::string meta_to_json(const MetaEvaluation& meta, RougeVariant variant) {
  ordered_json out;
  out["rouge_variant"] = rouge_variant_name(variant);
  out["judged"] = meta.judged;
  out["metrics"] = meta.vs_human.rows;
  out["targets"] = meta.vs_human.cols;
  out["pearson"] = matrix_json(meta.vs_human, meta.vs_human.pearson);
  out["kendall"] = matrix_json(meta.vs_human, meta.vs_human.kendall);
  out["metric_vs_metric"] = ordered_json{
      {"pearson", matrix_json(meta.vs_metric, meta.vs_metric.pearson)},
      {"kendall", matrix_json(meta.vs_metric, meta.vs_metric.kendall)}};
  return out.dump(2);
}

}  // namespace rdass
