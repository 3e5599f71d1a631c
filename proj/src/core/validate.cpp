#include "aftlab/core/validate.hpp"

#include <cmath>

namespace aftlab {

namespace {

bool in_range(double v, double lo, double hi) {
  return std::isfinite(v) && v >= lo && v <= hi;
}

}  // namespace

std::vector<std::string> validate_trial(const TrialRecord& rec) {
  std::vector<std::string> out;
  auto bad = [&out](const std::string& msg) { out.push_back(msg); };

  if (!(std::isfinite(rec.t_train_total) && rec.t_train_total >= 0.0))
    bad("negative time: t_train_total");
  if (!(std::isfinite(rec.t_predict_total) && rec.t_predict_total >= 0.0))
    bad("negative time: t_predict_total");
  if (!(std::isfinite(rec.t_attack_total) && rec.t_attack_total >= 0.0))
    bad("negative time: t_attack_total");

  if (!in_range(rec.acc_benign, 0.0, 1.0)) bad("accuracy out of [0,1]: acc_benign");
  if (!in_range(rec.acc_adv, 0.0, 1.0)) bad("accuracy out of [0,1]: acc_adv");

  if (rec.n_train < 1) bad("count < 1: n_train");
  if (rec.n_test < 1) bad("count < 1: n_test");
  if (rec.n_attack < 1) bad("count < 1: n_attack");

  if (!(std::isfinite(rec.epsilon) && rec.epsilon >= 0.0)) bad("negative epsilon");

  const auto& hp = rec.hyperparams;
  if (!in_range(hp.learning_rate, 1e-6, 1.0)) bad("learning_rate out of [1e-6, 1]");
  if (hp.batch_size < 1 || hp.batch_size > 100000) bad("batch_size out of [1, 1e5]");
  if (hp.epochs < 1 || hp.epochs > 100) bad("epochs out of [1, 100]");
  if (hp.bit_depth) {
    const int b = *hp.bit_depth;
    if (b != 4 && b != 8 && b != 16 && b != 32 && b != 64)
      bad("bit_depth not in {4,8,16,32,64}");
  }

  // Survivor counts must round cleanly back to integers.
  if (rec.n_attack >= 1 && in_range(rec.acc_adv, 0.0, 1.0)) {
    const double survivors = rec.acc_adv * static_cast<double>(rec.n_attack);
    if (std::abs(survivors - std::round(survivors)) > 1e-9)
      bad("acc_adv * n_attack is not an integer survivor count");
  }

  return out;
}

}  // namespace aftlab
