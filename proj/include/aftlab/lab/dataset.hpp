#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aftlab/core/matrix.hpp"

namespace aftlab::lab {

struct DatasetSpec {
  std::uint64_t seed = 0;
  int n_classes = 3;
  int n_dims = 2;
  int n_samples = 1000;
  std::string generator = "gaussian_blobs";
  double train_fraction = 0.8;
  int attack_size = 100;  // capped so the test split keeps at least one sample
};

// Synthetic classification data with standardized feature columns and fixed
// train/test/attack splits. Deterministic in the spec's seed.
struct Dataset {
  Matrix features;           // n x d, each column mean 0, std 1
  std::vector<int> labels;   // values in [0, n_classes)
  int n_classes = 0;
  std::vector<int> train_idx;
  std::vector<int> test_idx;
  std::vector<int> attack_idx;
};

Dataset make_dataset(const DatasetSpec& spec);

// Labels for the given row indices.
std::vector<int> gather_labels(const std::vector<int>& labels, const std::vector<int>& idx);

}  // namespace aftlab::lab
