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

#include "rdass/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rdass/error.hpp"

namespace rdass {
namespace {

int64_t tied_pairs(int64_t run) { return run * (run - 1) / 2; }

// Sum of tied pairs over runs of equal keys in an already sorted range.
template <typename Eq>
int64_t count_runs(size_t n, Eq equal) {
  int64_t total = 0;
  int64_t run = 1;
  for (size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      total += tied_pairs(run);
      run = 1;
    }
  }
  return total + tied_pairs(run);
}

// Stable merge sort of `v` that returns the number of strict inversions.
int64_t sort_counting_swaps(std::vector<double>& v, std::vector<double>& tmp,
                            size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = lo + (hi - lo) / 2;
  int64_t swaps = sort_counting_swaps(v, tmp, lo, mid) +
                  sort_counting_swaps(v, tmp, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<int64_t>(mid - i);
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return swaps;
}

}  // namespace

PairedSample::PairedSample(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw ArgumentError("paired series differ in length: " +
                        std::to_string(xs_.size()) + " vs " +
                        std::to_string(ys_.size()));
  }
  if (xs_.size() < 2) {
    throw ArgumentError("correlation needs at least 2 points");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(xs_.begin(), xs_.end(), finite) ||
      !std::all_of(ys_.begin(), ys_.end(), finite)) {
    throw ArgumentError("correlation input contains non-finite values");
  }
}

double pearson(const PairedSample& sample) {
  const auto xs = sample.xs();
  const auto ys = sample.ys();
  const double n = static_cast<double>(sample.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < sample.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateInputError(std::string("pearson: ") +
                               (sxx == 0.0 ? "x" : "y") +
                               " series is constant");
  }
  // As in cosine(): sqrt(sxx * sxx) == sxx, so pearson(x, x) is exactly 1.
  double product = sxx * syy;
  double denom = std::isfinite(product) && product > 0.0
                     ? std::sqrt(product)
                     : std::sqrt(sxx) * std::sqrt(syy);
  return std::clamp(sxy / denom, -1.0, 1.0);
}

KendallCounts kendall_counts(const PairedSample& sample) {
  const size_t n = sample.size();
  const auto xs = sample.xs();
  const auto ys = sample.ys();

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return xs[a] < xs[b] || (xs[a] == xs[b] && ys[a] < ys[b]);
  });

  KendallCounts c;
  c.pairs = tied_pairs(static_cast<int64_t>(n));
  c.tied_x = count_runs(n, [&](size_t i, size_t j) {
    return xs[order[i]] == xs[order[j]];
  });
  c.tied_xy = count_runs(n, [&](size_t i, size_t j) {
    return xs[order[i]] == xs[order[j]] && ys[order[i]] == ys[order[j]];
  });

  std::vector<double> y_sorted(n);
  for (size_t i = 0; i < n; ++i) y_sorted[i] = ys[order[i]];
  std::vector<double> tmp(n);
  const int64_t swaps = sort_counting_swaps(y_sorted, tmp, 0, n);
  c.tied_y = count_runs(
      n, [&](size_t i, size_t j) { return y_sorted[i] == y_sorted[j]; });

  c.discordant = swaps;
  c.concordant =
      c.pairs - c.tied_x - c.tied_y + c.tied_xy - c.discordant;
  return c;
}

double kendall_tau(const PairedSample& sample) {
  const KendallCounts c = kendall_counts(sample);
  const int64_t untied_x = c.pairs - c.tied_x;
  const int64_t untied_y = c.pairs - c.tied_y;
  if (untied_x == 0 || untied_y == 0) {
    throw DegenerateInputError(std::string("kendall: ") +
                               (untied_x == 0 ? "x" : "y") +
                               " series is constant");
  }
  const double numerator = static_cast<double>(c.concordant - c.discordant);
  const double denom = std::sqrt(static_cast<double>(untied_x) *
                                 static_cast<double>(untied_y));
  return std::clamp(numerator / denom, -1.0, 1.0);
}

}  // namespace rdass
