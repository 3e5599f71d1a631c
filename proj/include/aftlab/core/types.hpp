#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aftlab {

// Hyper-parameters explored by the trial loop.
struct HyperParams {
  double learning_rate = 0.01;      // SGD step size, in [1e-6, 1]
  std::int64_t batch_size = 32;     // mini-batch size, in [1, 1e5]
  int epochs = 10;                  // passes over the training set, in [1, 100]
  std::optional<int> bit_depth;     // feature-squeezing depth; absent = undefended

  bool operator==(const HyperParams&) const = default;
};

// One hyper-parameter evaluation: configuration, measured times, accuracies.
// Times are totals over the named split; per-sample values are total / count.
struct TrialRecord {
  std::int64_t trial_id = 0;
  std::string dataset_tag;
  std::string hardware_tag;
  std::int64_t random_state = 0;    // seed controlling the data split; control covariate
  HyperParams hyperparams;
  double epsilon = 0.0;             // attack noise bound
  std::int64_t n_train = 1;
  std::int64_t n_test = 1;
  std::int64_t n_attack = 1;
  double t_train_total = 0.0;       // seconds, whole training run
  double t_predict_total = 0.0;     // seconds, test-split inference
  double t_attack_total = 0.0;      // seconds, attack generation
  double acc_benign = 0.0;
  double acc_adv = 0.0;
  bool failed = false;              // trial aborted; metrics are not meaningful
  std::string failure_reason;

  bool operator==(const TrialRecord&) const = default;
};

// Static cost/power profile for a named device.
struct HardwareProfile {
  std::string name;
  double cost_per_hour = 0.0;       // USD per hour
  double power_watts = 0.0;
  double bandwidth_gbps = 0.0;      // informational only

  bool operator==(const HardwareProfile&) const = default;
};

// Built-in GPU profiles (V100, P100, L4) with list prices and rated power.
std::vector<HardwareProfile> default_hardware_profiles();

// Looks up a profile by name; throws DataError when absent.
const HardwareProfile& find_profile(const std::vector<HardwareProfile>& profiles,
                                    const std::string& name);

}  // namespace aftlab
