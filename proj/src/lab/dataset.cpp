#include "aftlab/lab/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "aftlab/core/error.hpp"
#include "aftlab/core/rand.hpp"

namespace aftlab::lab {

namespace {

void standardize_columns(Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x(i, j) -= mean;
      var += x(i, j) * x(i, j);
    }
    const double sd = std::sqrt(var / static_cast<double>(n));
    if (sd > 1e-12) {
      for (std::size_t i = 0; i < n; ++i) x(i, j) /= sd;
    }
  }
}

}  // namespace

Dataset make_dataset(const DatasetSpec& spec) {
  if (spec.generator != "gaussian_blobs")
    throw DataError("unknown dataset generator: " + spec.generator);
  if (spec.n_dims < 1) throw ValidationError("make_dataset: n_dims must be >= 1");
  if (spec.n_classes < 2) throw ValidationError("make_dataset: n_classes must be >= 2");
  if (spec.n_samples < 10 * spec.n_classes)
    throw ValidationError("make_dataset: n_samples must be >= 10 * n_classes");

  const int n = spec.n_samples;
  const int d = spec.n_dims;
  const int k = spec.n_classes;

  std::mt19937_64 rng(mix_seed(spec.seed, 0xDA7A));
  std::uniform_real_distribution<double> center_dist(-8.0, 8.0);
  std::normal_distribution<double> noise(0.0, 1.0);

  Matrix centers(static_cast<std::size_t>(k), static_cast<std::size_t>(d));
  for (auto& c : centers.data()) c = center_dist(rng);

  Dataset out;
  out.n_classes = k;
  out.features = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  out.labels.resize(static_cast<std::size_t>(n));
  // Round-robin labels keep class counts balanced within one sample.
  for (int i = 0; i < n; ++i) {
    const int label = i % k;
    out.labels[static_cast<std::size_t>(i)] = label;
    for (int j = 0; j < d; ++j) {
      out.features(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          centers(static_cast<std::size_t>(label), static_cast<std::size_t>(j)) + noise(rng);
    }
  }
  standardize_columns(out.features);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  const int n_train = static_cast<int>(std::lround(spec.train_fraction * n));
  if (n_train < 1 || n_train > n - 2)
    throw ValidationError("make_dataset: train fraction leaves no room for test/attack splits");
  const int n_attack = std::min<int>(spec.attack_size, n - n_train - 1);
  if (n_attack < 1) throw ValidationError("make_dataset: no samples left for the attack split");

  out.train_idx.assign(order.begin(), order.begin() + n_train);
  out.attack_idx.assign(order.begin() + n_train, order.begin() + n_train + n_attack);
  out.test_idx.assign(order.begin() + n_train + n_attack, order.end());
  return out;
}

std::vector<int> gather_labels(const std::vector<int>& labels, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace aftlab::lab
