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

// Pearson product-moment and Kendall tau-b rank correlation.

#ifndef RDASS_STATS_HPP_
#define RDASS_STATS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace rdass {

// Two equally long series of finite values, at least two points each.
class PairedSample {
 public:
  // Throws ArgumentError when the invariants do not hold.
  PairedSample(std::vector<double> xs, std::vector<double> ys);

  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  size_t size() const { return xs_.size(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Throws DegenerateInputError when either series is constant.
double pearson(const PairedSample& sample);

// Pair counts behind tau-b. Ties are exact equality.
struct KendallCounts {
  int64_t pairs = 0;       // n(n-1)/2
  int64_t tied_x = 0;      // pairs tied in x, joint ties included
  int64_t tied_y = 0;      // pairs tied in y, joint ties included
  int64_t tied_xy = 0;     // pairs tied in both
  int64_t discordant = 0;
  int64_t concordant = 0;
};

// O(n log n) counting (Knight's merge-sort method).
KendallCounts kendall_counts(const PairedSample& sample);

// (C - D) / sqrt((n0 - n1)(n0 - n2)). Throws DegenerateInputError when
// every pair is tied in either series.
double kendall_tau(const PairedSample& sample);

}  // namespace rdass

#endif  // RDASS_STATS_HPP_
