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

// Triplet margin objectives on Euclidean distance, with analytic gradients
// and a central finite-difference checker for them.

#ifndef RDASS_TRIPLET_HPP_
#define RDASS_TRIPLET_HPP_

#include <cstdint>
#include <string>

#include "rdass/embedding.hpp"

namespace rdass {

inline constexpr double kDefaultMargin = 1.0;

// Anchor (pooled decoder states), positive and negative sentence vectors.
// The constructor enforces a shared dimension and a finite margin >= 0.
class TripletBatch {
 public:
  TripletBatch(EmbeddingVector anchor, EmbeddingVector positive,
               EmbeddingVector negative, double epsilon = kDefaultMargin);

  const EmbeddingVector& anchor() const { return anchor_; }
  const EmbeddingVector& positive() const { return positive_; }
  const EmbeddingVector& negative() const { return negative_; }
  double epsilon() const { return epsilon_; }
  size_t dim() const { return anchor_.dim(); }

 private:
  EmbeddingVector anchor_;
  EmbeddingVector positive_;
  EmbeddingVector negative_;
  double epsilon_;
};

// Throws ArgumentError on a dimension mismatch.
double euclidean(const EmbeddingVector& u, const EmbeddingVector& v);

// epsilon + d(anchor, positive) - d(anchor, negative), before the hinge.
double triplet_margin(const TripletBatch& batch);

// max(0, triplet_margin(batch)).
double triplet_loss(const TripletBatch& batch);

// Reference term plus document term.
double combined_loss(const TripletBatch& ref_batch,
                     const TripletBatch& doc_batch);

struct TripletGradient {
  EmbeddingVector anchor;
  EmbeddingVector positive;
  EmbeddingVector negative;
};

// Zero vectors when the loss is 0, including exactly at the kink. Throws
// DegenerateInputError when the hinge is active and the anchor coincides
// with the positive or the negative.
TripletGradient triplet_grad(const TripletBatch& batch);

struct GradientCheckOptions {
  size_t dim = 8;
  size_t trials = 1000;
  uint64_t seed = 0;
  double epsilon = kDefaultMargin;
  double step = 1e-5;
  double tolerance = 1e-5;
  // Batches whose margin lies within this distance of the kink are redrawn.
  double kink_exclusion = 1e-3;
};

struct GradientCheckReport {
  size_t trials = 0;
  size_t passed = 0;
  size_t redrawn = 0;  // batches rejected for being inactive or near the kink
  double max_relative_error = 0.0;
  size_t worst_trial = 0;

  bool ok() const { return trials > 0 && passed == trials; }
};

// Draws `trials` active-hinge batches with components uniform in [-1, 1]
// and compares triplet_grad against central differences of triplet_loss.
// The error of each trial is the largest of the three norm-wise relative
// errors |g - g_fd| / max(|g|, |g_fd|).
GradientCheckReport check_gradients(const GradientCheckOptions& options);

}  // namespace rdass

#endif  // RDASS_TRIPLET_HPP_
