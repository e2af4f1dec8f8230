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

#include "rdass/triplet.hpp"

#include <algorithm>
#include <cmath>

#include "rdass/error.hpp"
#include "rdass/random.hpp"

namespace rdass {
namespace {

void require_same_dim(const EmbeddingVector& u, const EmbeddingVector& v,
                      const char* what) {
  if (u.dim() != v.dim()) {
    throw ArgumentError(std::string(what) + ": dimensions " +
                        std::to_string(u.dim()) + " and " +
                        std::to_string(v.dim()) + " differ");
  }
}

// (u - v) / scale
EmbeddingVector scaled_difference(const EmbeddingVector& u,
                                  const EmbeddingVector& v, double scale) {
  std::vector<double> out(u.dim());
  for (size_t i = 0; i < u.dim(); ++i) out[i] = (u[i] - v[i]) / scale;
  return EmbeddingVector(std::move(out));
}

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double relative_error(std::span<const double> analytic,
                      std::span<const double> numeric) {
  double diff = 0.0;
  for (size_t i = 0; i < analytic.size(); ++i) {
    double d = analytic[i] - numeric[i];
    diff += d * d;
  }
  double scale = std::max(norm(analytic), norm(numeric));
  if (scale == 0.0) return 0.0;
  return std::sqrt(diff) / scale;
}

EmbeddingVector random_vector(SeededRng& rng, size_t dim) {
  std::vector<double> v(dim);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return EmbeddingVector(std::move(v));
}

// Central differences of triplet_loss with respect to one of the three
// vectors (0 anchor, 1 positive, 2 negative).
std::vector<double> numeric_gradient(const TripletBatch& batch, int which,
                                     double step) {
  std::vector<double> base[3] = {
      {batch.anchor().values().begin(), batch.anchor().values().end()},
      {batch.positive().values().begin(), batch.positive().values().end()},
      {batch.negative().values().begin(), batch.negative().values().end()}};
  auto loss_with = [&](size_t i, double x) {
    std::vector<double> parts[3] = {base[0], base[1], base[2]};
    parts[which][i] = x;
    return triplet_loss(TripletBatch(EmbeddingVector(parts[0]),
                                     EmbeddingVector(parts[1]),
                                     EmbeddingVector(parts[2]),
                                     batch.epsilon()));
  };
  std::vector<double> grad(batch.dim());
  for (size_t i = 0; i < batch.dim(); ++i) {
    const double x = base[which][i];
    grad[i] = (loss_with(i, x + step) - loss_with(i, x - step)) / (2 * step);
  }
  return grad;
}

}  // namespace

TripletBatch::TripletBatch(EmbeddingVector anchor, EmbeddingVector positive,
                           EmbeddingVector negative, double epsilon)
    : anchor_(std::move(anchor)),
      positive_(std::move(positive)),
      negative_(std::move(negative)),
      epsilon_(epsilon) {
  require_same_dim(anchor_, positive_, "triplet anchor/positive");
  require_same_dim(anchor_, negative_, "triplet anchor/negative");
  if (!std::isfinite(epsilon_) || epsilon_ < 0.0) {
    throw ArgumentError("triplet margin must be finite and >= 0");
  }
}

double euclidean(const EmbeddingVector& u, const EmbeddingVector& v) {
  require_same_dim(u, v, "euclidean");
  double s = 0.0;
  for (size_t i = 0; i < u.dim(); ++i) {
    double d = u[i] - v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double triplet_margin(const TripletBatch& batch) {
  // Distances first, so equal distances leave the margin exactly epsilon.
  return batch.epsilon() + (euclidean(batch.anchor(), batch.positive()) -
                            euclidean(batch.anchor(), batch.negative()));
}

double triplet_loss(const TripletBatch& batch) {
  return std::max(0.0, triplet_margin(batch));
}

double combined_loss(const TripletBatch& ref_batch,
                     const TripletBatch& doc_batch) {
  return triplet_loss(ref_batch) + triplet_loss(doc_batch);
}

TripletGradient triplet_grad(const TripletBatch& batch) {
  const EmbeddingVector& a = batch.anchor();
  const EmbeddingVector& p = batch.positive();
  const EmbeddingVector& n = batch.negative();
  const double d_ap = euclidean(a, p);
  const double d_an = euclidean(a, n);
  if (batch.epsilon() + (d_ap - d_an) <= 0.0) {
    return {EmbeddingVector::zeros(a.dim()), EmbeddingVector::zeros(a.dim()),
            EmbeddingVector::zeros(a.dim())};
  }
  if (d_ap == 0.0 || d_an == 0.0) {
    throw DegenerateInputError(
        "triplet gradient undefined: anchor coincides with " +
        std::string(d_ap == 0.0 ? "positive" : "negative"));
  }
  EmbeddingVector grad_positive = scaled_difference(p, a, d_ap);
  EmbeddingVector grad_negative = scaled_difference(a, n, d_an);
  std::vector<double> grad_anchor(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    grad_anchor[i] = (a[i] - p[i]) / d_ap - (a[i] - n[i]) / d_an;
  }
  return {EmbeddingVector(std::move(grad_anchor)), std::move(grad_positive),
          std::move(grad_negative)};
}

GradientCheckReport check_gradients(const GradientCheckOptions& options) {
  if (options.dim < 1) throw ArgumentError("dim must be >= 1");
  if (options.trials < 1) throw ArgumentError("trials must be >= 1");

  SeededRng rng(options.seed);
  GradientCheckReport report;
  // Uniform draws make active batches common; the cap only guards against
  // margins that can never activate.
  const size_t max_draws = options.trials * 1000;
  size_t draws = 0;
  while (report.trials < options.trials) {
    if (++draws > max_draws) {
      throw ArgumentError("could not draw enough active-hinge batches");
    }
    TripletBatch batch(random_vector(rng, options.dim),
                       random_vector(rng, options.dim),
                       random_vector(rng, options.dim), options.epsilon);
    if (triplet_margin(batch) <= options.kink_exclusion) {
      ++report.redrawn;
      continue;
    }
    TripletGradient g = triplet_grad(batch);
    double err = std::max(
        {relative_error(g.anchor.values(),
                        numeric_gradient(batch, 0, options.step)),
         relative_error(g.positive.values(),
                        numeric_gradient(batch, 1, options.step)),
         relative_error(g.negative.values(),
                        numeric_gradient(batch, 2, options.step))});
    if (err > report.max_relative_error) {
      report.max_relative_error = err;
      report.worst_trial = report.trials;
    }
    if (err < options.tolerance) ++report.passed;
    ++report.trials;
  }
  return report;
}

}  // namespace rdass
