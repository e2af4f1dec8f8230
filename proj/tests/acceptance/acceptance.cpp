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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Every check runs on the hash and file-store
// backends only.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rdass/backends.hpp"
#include "rdass/cli.hpp"
#include "rdass/corpus.hpp"
#include "rdass/error.hpp"
#include "rdass/rouge.hpp"
#include "rdass/semantic.hpp"
#include "rdass/stats.hpp"
#include "rdass/triplet.hpp"

#ifndef RDASS_TEST_DATA_DIR
#error "RDASS_TEST_DATA_DIR must be defined"
#endif

namespace rdass {
namespace {

using Clock = std::chrono::steady_clock;
using testing::TempDir;

// Collects failure details for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) detail_ << "\n    " << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    std::string d = detail_.str();
    if (failures_ > 5) d += "\n    (" + std::to_string(failures_ - 5) + " more)";
    return d;
  }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

void averaging_arithmetic(Check& c) {
  const double r = combine(1.00, 0.55, Aggregator::kAvg);
  c.expect(std::abs(r - 0.775) <= 1e-12, "combine(1.00, 0.55) = " + fmt(r));
  c.expect(round_to(r, 2) == 0.78, "round_to(rdass, 2) = " + fmt(round_to(r, 2)));
}

std::vector<EvalExample> identical_corpus() {
  std::mt19937_64 rng(17);
  std::vector<EvalExample> out;
  for (int i = 0; i < 50; ++i) {
    auto doc = testing::random_tokens(rng, 40, 12);
    auto ref = testing::random_tokens(rng, 10, 12);
    auto join = [](const std::vector<std::string>& t, const char* tail) {
      std::string s = tail;
      for (const auto& w : t) s += " " + w;
      return s;
    };
    std::string reference = join(ref, "summary");
    out.push_back(EvalExample{"id" + std::to_string(i), join(doc, "source"),
                              reference, reference, std::nullopt});
  }
  return out;
}

void identical_generated(Check& c) {
  auto corpus = identical_corpus();
  HashBackend hash;
  std::vector<FileStoreBackend::Record> records;
  std::mt19937_64 rng(3);
  for (const EvalExample& e : corpus) {
    // The file store holds the same vector under the generated and
    // reference keys, as any deterministic embedder would produce.
    auto shared = EmbeddingVector(testing::random_vector(rng, 24, -1, 1));
    records.emplace_back(
        FileStoreBackend::composite_key(e.id, TextField::kGenerated), shared);
    records.emplace_back(
        FileStoreBackend::composite_key(e.id, TextField::kReference), shared);
    records.emplace_back(
        FileStoreBackend::composite_key(e.id, TextField::kDocument),
        EmbeddingVector(testing::random_vector(rng, 24, -1, 1)));
  }
  TempDir dir;
  const auto store_path = dir.path("store.jsonl");
  write_file_store(store_path, records);
  FileStoreBackend store = FileStoreBackend::load(store_path);

  for (const EmbeddingBackend* backend :
       {static_cast<const EmbeddingBackend*>(&hash),
        static_cast<const EmbeddingBackend*>(&store)}) {
    EvaluationConfig config;
    config.workers = 4;
    auto result = evaluate(corpus, *backend, config);
    c.expect(result.errors.empty() && result.reports.size() == corpus.size(),
             "unexpected evaluation errors");
    for (const MetricReport& r : result.reports) {
      c.expect(r.semantic.s_pr == 1.0, r.id + ": s_pr = " + fmt(r.semantic.s_pr));
      c.expect(r.semantic.rdass == (1.0 + r.semantic.s_pd) / 2.0,
               r.id + ": rdass = " + fmt(r.semantic.rdass));
    }
  }
}

void rouge_oracle(Check& c) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const size_t alphabet = 1 + t % 4;
    TokenSequence a{testing::random_tokens(rng, 8, alphabet)};
    TokenSequence b{testing::random_tokens(rng, 10, alphabet)};
    for (size_t n : {1u, 2u, 3u}) {
      RougeScore got = rouge_n(a, b, n);
      auto want = testing::brute_rouge_n(a.tokens, b.tokens, n);
      c.expect(got.precision == want.precision && got.recall == want.recall &&
                   got.f1 == want.f1,
               "rouge_n mismatch at trial " + std::to_string(t));
    }
    c.expect(lcs_length(a.tokens, b.tokens) ==
                 testing::brute_lcs(a.tokens, b.tokens),
             "lcs mismatch at trial " + std::to_string(t));
  }
}

std::vector<double> as_vector(const EmbeddingVector& v) {
  return {v.values().begin(), v.values().end()};
}

void gradient_check(Check& c) {
  std::mt19937_64 rng(8);
  const double eps = kDefaultMargin, h = 1e-5, kink = 1e-3;
  int checked = 0;
  double worst = 0.0;
  while (checked < 1000) {
    auto a = testing::random_vector(rng, 8, -1, 1);
    auto p = testing::random_vector(rng, 8, -1, 1);
    auto n = testing::random_vector(rng, 8, -1, 1);
    TripletBatch batch{EmbeddingVector(a), EmbeddingVector(p),
                       EmbeddingVector(n), eps};
    if (triplet_margin(batch) <= kink) continue;
    TripletGradient g = triplet_grad(batch);
    const EmbeddingVector* parts[] = {&g.anchor, &g.positive, &g.negative};
    for (int which = 0; which < 3; ++which) {
      double err = testing::norm_relative_error(
          as_vector(*parts[which]),
          testing::fd_triplet_gradient(a, p, n, eps, which, h));
      worst = std::max(worst, err);
    }
    ++checked;
  }
  c.expect(worst < 1e-5, "max relative error " + fmt(worst));

  GradientCheckReport report = check_gradients({});
  c.expect(report.ok() && report.trials == 1000,
           "built-in check: max relative error " +
               fmt(report.max_relative_error));
}

void loss_additivity(Check& c) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<size_t> dims(1, 32);
  for (int t = 0; t < 10000; ++t) {
    const size_t d = dims(rng);
    auto v = [&] { return EmbeddingVector(testing::random_vector(rng, d, -2, 2)); };
    EmbeddingVector anchor = v();
    TripletBatch ref(anchor, v(), v(), kDefaultMargin);
    TripletBatch doc(anchor, v(), v(), kDefaultMargin);
    const double sum = triplet_loss(ref) + triplet_loss(doc);
    c.expect(std::abs(combined_loss(ref, doc) - sum) <= 1e-15,
             "trial " + std::to_string(t) + ": " + fmt(combined_loss(ref, doc)) +
                 " vs " + fmt(sum));
    TripletBatch same(anchor, ref.positive(), ref.positive(), kDefaultMargin);
    c.expect(triplet_loss(same) == kDefaultMargin,
             "loss with p = n: " + fmt(triplet_loss(same)));
  }
}

void correlation_oracles(Check& c) {
  std::mt19937_64 rng(12);
  int compared = 0;
  while (compared < 500) {
    const size_t n = 2 + rng() % 49;
    std::uniform_int_distribution<int> level(1, 1 + static_cast<int>(rng() % 6));
    std::vector<double> x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = level(rng);
      y[i] = level(rng);
    }
    const double want = testing::brute_kendall_tau_b(x, y);
    if (!std::isfinite(want)) continue;
    const double got = kendall_tau(PairedSample(x, y));
    c.expect(got == want, "n=" + std::to_string(n) + ": " + fmt(got) +
                              " vs " + fmt(want));
    ++compared;
  }
  std::uniform_real_distribution<double> u(-100, 100);
  for (int t = 0; t < 500; ++t) {
    const size_t n = 2 + rng() % 60;
    const double slope = u(rng), intercept = u(rng);
    if (slope == 0.0) continue;
    std::vector<double> x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = u(rng);
      y[i] = slope * x[i] + intercept;
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) {
      continue;
    }
    const double r = pearson(PairedSample(x, y));
    c.expect(std::abs(r - (slope > 0 ? 1.0 : -1.0)) <= 1e-12,
             "pearson on linear series = " + fmt(r));
  }
}

void meta_matrix(Check& c) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> score(1.0, 5.0);
  std::vector<EvalExample> corpus;
  std::vector<MetricReport> reports;
  HashBackend backend;
  for (int i = 0; i < 40; ++i) {
    auto doc = testing::random_tokens(rng, 30, 10);
    auto ref = testing::random_tokens(rng, 8, 6);
    auto gen = testing::random_tokens(rng, 8, 6);
    auto join = [](std::vector<std::string> t) {
      std::string s = "w";
      for (auto& w : t) s += " " + w;
      return s;
    };
    EvalExample e{"m" + std::to_string(i), join(doc), join(ref), join(gen),
                  HumanJudgment{score(rng), score(rng), score(rng)}};
    MetricReport r = evaluate_example(e, backend, {});
    // rdass as a strictly increasing transform of human_avg.
    r.semantic.rdass = std::tanh(e.human->human_avg() - 3.0);
    corpus.push_back(std::move(e));
    reports.push_back(std::move(r));
  }
  try {
    MetaEvaluation m = meta_evaluate(reports, corpus);
    const auto& p = m.vs_metric.pearson;
    for (size_t i = 0; i < p.size(); ++i) {
      c.expect(p[i][i] == 1.0, "diagonal " + m.vs_metric.rows[i] + " = " +
                                   fmt(p[i][i]));
      for (size_t j = 0; j < p.size(); ++j) {
        c.expect(p[i][j] == p[j][i], "asymmetric at " + std::to_string(i) +
                                         "," + std::to_string(j));
      }
    }
    c.expect(m.vs_human.rows[5] == "rdass" && m.vs_human.cols[3] == "human_avg",
             "unexpected table layout");
    c.expect(m.vs_human.kendall[5][3] == 1.0,
             "kendall(rdass, human_avg) = " + fmt(m.vs_human.kendall[5][3]));
    c.expect(m.vs_metric.rows[0] == "rouge1" && m.vs_metric.cols[1] == "rouge2" &&
                 std::isfinite(p[0][1]),
             "pearson(rouge1, rouge2) missing");
  } catch (const Error& e) {
    c.expect(false, std::string("meta_evaluate threw: ") + e.what());
  }
}

void determinism(Check& c) {
  const std::filesystem::path data = RDASS_TEST_DATA_DIR;
  TempDir dir;
  auto run_once = [&](const std::string& name, const std::string& workers) {
    std::ostringstream out, err;
    const auto path = dir.path(name);
    int code = cli::run({"evaluate", "--input",
                         (data / "golden_corpus.jsonl").string(), "--output",
                         path.string(), "--backend", "hash", "--seed", "7",
                         "--workers", workers},
                        out, err, [](std::string_view) { return std::nullopt; });
    c.expect(code == cli::kExitOk, "evaluate exited " + std::to_string(code) +
                                       ": " + err.str());
    return testing::slurp(path);
  };
  const std::string first = run_once("a.jsonl", "1");
  const std::string second = run_once("b.jsonl", "4");
  c.expect(!first.empty() && first == second, "runs differ");
  // Frozen bytes guard against drift between platforms and builds.
  c.expect(first == testing::slurp(data / "golden_reports.jsonl"),
           "reports differ from the frozen golden file");
}

void cosine_properties(Check& c) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<size_t> dims(1, 64);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int t = 0; t < 10000; ++t) {
    const size_t d = dims(rng);
    EmbeddingVector u(testing::random_vector(rng, d, -1, 1));
    EmbeddingVector v(testing::random_vector(rng, d, -1, 1));
    const double uv = cosine(u, v);
    c.expect(uv >= -1.0 && uv <= 1.0, "out of bounds: " + fmt(uv));
    c.expect(uv == cosine(v, u), "asymmetric: " + fmt(uv));
    c.expect(cosine(u, u) == 1.0, "self cosine " + fmt(cosine(u, u)));
    std::vector<double> scaled(u.values().begin(), u.values().end());
    const double k = scale(rng);
    for (double& x : scaled) x *= k;
    const double su = cosine(EmbeddingVector(scaled), v);
    c.expect(std::abs(su - uv) <= 1e-12,
             "scale " + fmt(k) + ": " + fmt(su) + " vs " + fmt(uv));
  }
  bool raised = false;
  try {
    cosine(EmbeddingVector::zeros(4), EmbeddingVector{1, 2, 3, 4});
  } catch (const DegenerateInputError&) {
    raised = true;
  }
  c.expect(raised, "zero vector did not raise");
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> body;
  double budget_seconds;  // 0 for no limit
};

}  // namespace
}  // namespace rdass

int main() {
  using namespace rdass;
  const Criterion criteria[] = {
      {"rdass averaging: 1.00 and 0.55 give 0.775, shown as 0.78",
       averaging_arithmetic, 0},
      {"generated equal to reference: s_pr = 1 and rdass = (1 + s_pd) / 2",
       identical_generated, 0},
      {"rouge-n and LCS match brute force on 1000 pairs", rouge_oracle, 5},
      {"triplet gradients match central differences on 1000 batches",
       gradient_check, 5},
      {"combined loss is additive; loss with p = n equals the margin",
       loss_additivity, 0},
      {"kendall tau-b matches all-pairs oracle; pearson is +-1 on lines",
       correlation_oracles, 0},
      {"metric matrix symmetric with unit diagonal; monotone rdass ranks "
       "with human_avg",
       meta_matrix, 0},
      {"evaluate output is byte-identical across runs and matches golden",
       determinism, 0},
      {"cosine bounds, symmetry, scale invariance; zero vector raises",
       cosine_properties, 0},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("uncaught: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (criterion.budget_seconds > 0 && elapsed >= criterion.budget_seconds) {
      check.expect(false, "took " + fmt(elapsed) + " s");
    }
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << elapsed;
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  " << criterion.name
              << "  (" << timing.str() << " s)" << check.detail() << '\n';
    if (!check.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " +
                                                          std::to_string(failed))
            << '\n';
  return failed == 0 ? 0 : 1;
}
