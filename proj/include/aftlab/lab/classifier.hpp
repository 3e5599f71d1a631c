#pragma once

#include <cstdint>
#include <vector>

#include "aftlab/core/clock.hpp"
#include "aftlab/core/matrix.hpp"
#include "aftlab/core/types.hpp"
#include "aftlab/lab/dataset.hpp"

namespace aftlab::lab {

// One-hidden-layer tanh network with softmax cross-entropy loss.
struct ClassifierParams {
  Matrix w1;               // hidden x input
  std::vector<double> b1;  // hidden
  Matrix w2;               // classes x hidden
  std::vector<double> b2;  // classes

  int input_dim() const { return static_cast<int>(w1.cols()); }
  int hidden_dim() const { return static_cast<int>(w1.rows()); }
  int n_classes() const { return static_cast<int>(w2.rows()); }
  bool finite() const;
};

ClassifierParams init_classifier(int input_dim, int hidden_dim, int n_classes,
                                 std::uint64_t seed);

// Mean softmax cross-entropy loss over the given rows.
double mean_loss(const ClassifierParams& params, const Matrix& x, const std::vector<int>& y);

struct TrainResult {
  ClassifierParams params;
  double t_train_total = 0.0;  // seconds
  long n_updates = 0;
};

// Mini-batch SGD on the training split: ceil(n_train / b) * epochs updates of
// theta <- theta - lr * grad. Parameters are deterministic given the seed;
// the returned time comes from the injected clock. Throws NumericalError with
// the offending update index if the loss becomes non-finite.
TrainResult train_classifier(const Dataset& data, const HyperParams& hp, std::uint64_t seed,
                             Clock& clock, int hidden_width = 32);

// Fraction of correct predictions: 1 - false / total. Rejects empty input.
// When a clock is given, per-sample inference work is charged to it.
double evaluate_accuracy(const ClassifierParams& params, const Matrix& x,
                         const std::vector<int>& y, Clock* clock = nullptr);

// Per-row gradient of each sample's own loss with respect to its input.
Matrix input_gradients(const ClassifierParams& params, const Matrix& x,
                       const std::vector<int>& y);

// Simulated cost of one forward pass per sample, in seconds.
double inference_charge_per_sample(const ClassifierParams& params);

}  // namespace aftlab::lab
