#include "aftlab/lab/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "aftlab/core/error.hpp"
#include "aftlab/core/rand.hpp"

namespace aftlab::lab {

namespace {

constexpr double kSecondsPerFlop = 1e-9;  // simulated-clock cost model

double flops_per_sample_forward(const ClassifierParams& p) {
  return 2.0 * (static_cast<double>(p.input_dim()) * p.hidden_dim() +
                static_cast<double>(p.hidden_dim()) * p.n_classes());
}

struct Workspace {
  std::vector<double> z1, a1, z2, probs, dz1, dz2;
  void resize(int hidden, int classes) {
    z1.resize(static_cast<std::size_t>(hidden));
    a1.resize(static_cast<std::size_t>(hidden));
    z2.resize(static_cast<std::size_t>(classes));
    probs.resize(static_cast<std::size_t>(classes));
    dz1.resize(static_cast<std::size_t>(hidden));
    dz2.resize(static_cast<std::size_t>(classes));
  }
};

// Forward pass for one row; returns the sample loss -log p[label].
double forward(const ClassifierParams& p, std::span<const double> x, int label, Workspace& w) {
  const int h = p.hidden_dim();
  const int k = p.n_classes();
  const int d = p.input_dim();
  for (int i = 0; i < h; ++i) {
    double s = p.b1[static_cast<std::size_t>(i)];
    for (int j = 0; j < d; ++j) s += p.w1(i, j) * x[static_cast<std::size_t>(j)];
    w.z1[static_cast<std::size_t>(i)] = s;
    w.a1[static_cast<std::size_t>(i)] = std::tanh(s);
  }
  double zmax = -1e300;
  for (int c = 0; c < k; ++c) {
    double s = p.b2[static_cast<std::size_t>(c)];
    for (int i = 0; i < h; ++i) s += p.w2(c, i) * w.a1[static_cast<std::size_t>(i)];
    w.z2[static_cast<std::size_t>(c)] = s;
    zmax = std::max(zmax, s);
  }
  double sum = 0.0;
  for (int c = 0; c < k; ++c) {
    w.probs[static_cast<std::size_t>(c)] = std::exp(w.z2[static_cast<std::size_t>(c)] - zmax);
    sum += w.probs[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < k; ++c) w.probs[static_cast<std::size_t>(c)] /= sum;
  const double lse = zmax + std::log(sum);
  return lse - w.z2[static_cast<std::size_t>(label)];
}

int argmax_class(const ClassifierParams& p, std::span<const double> x, Workspace& w) {
  forward(p, x, 0, w);
  return static_cast<int>(std::max_element(w.z2.begin(), w.z2.end()) - w.z2.begin());
}

}  // namespace

bool ClassifierParams::finite() const {
  auto ok = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  return ok(w1.data()) && ok(w2.data()) && ok(b1) && ok(b2);
}

ClassifierParams init_classifier(int input_dim, int hidden_dim, int n_classes,
                                 std::uint64_t seed) {
  ClassifierParams p;
  p.w1 = Matrix(static_cast<std::size_t>(hidden_dim), static_cast<std::size_t>(input_dim));
  p.b1.assign(static_cast<std::size_t>(hidden_dim), 0.0);
  p.w2 = Matrix(static_cast<std::size_t>(n_classes), static_cast<std::size_t>(hidden_dim));
  p.b2.assign(static_cast<std::size_t>(n_classes), 0.0);

  std::mt19937_64 rng(mix_seed(seed, 0x1217));
  const double s1 = 1.0 / std::sqrt(static_cast<double>(input_dim));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
  std::uniform_real_distribution<double> d1(-s1, s1);
  std::uniform_real_distribution<double> d2(-s2, s2);
  for (auto& v : p.w1.data()) v = d1(rng);
  for (auto& v : p.w2.data()) v = d2(rng);
  return p;
}

double mean_loss(const ClassifierParams& params, const Matrix& x, const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("mean_loss: empty input");
  Workspace w;
  w.resize(params.hidden_dim(), params.n_classes());
  double total = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) total += forward(params, x.row(i), y[i], w);
  return total / static_cast<double>(x.rows());
}

TrainResult train_classifier(const Dataset& data, const HyperParams& hp, std::uint64_t seed,
                             Clock& clock, int hidden_width) {
  const double t0 = clock.now();
  const int d = static_cast<int>(data.features.cols());
  ClassifierParams p = init_classifier(d, hidden_width, data.n_classes, seed);

  const std::size_t n_train = data.train_idx.size();
  const std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(hp.batch_size), n_train);
  const double eta = hp.learning_rate;

  Workspace w;
  w.resize(p.hidden_dim(), p.n_classes());
  Matrix gw1(p.w1.rows(), p.w1.cols());
  Matrix gw2(p.w2.rows(), p.w2.cols());
  std::vector<double> gb1(p.b1.size()), gb2(p.b2.size());

  std::vector<int> order = data.train_idx;
  std::mt19937_64 shuffle_rng(mix_seed(seed, 0x5FFL));
  const double update_charge =
      3.0 * flops_per_sample_forward(p) * static_cast<double>(batch) * kSecondsPerFlop;

  TrainResult out;
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    for (std::size_t start = 0; start < n_train; start += batch) {
      const std::size_t stop = std::min(start + batch, n_train);
      const double nb = static_cast<double>(stop - start);
      std::fill(gw1.data().begin(), gw1.data().end(), 0.0);
      std::fill(gw2.data().begin(), gw2.data().end(), 0.0);
      std::fill(gb1.begin(), gb1.end(), 0.0);
      std::fill(gb2.begin(), gb2.end(), 0.0);

      double batch_loss = 0.0;
      for (std::size_t s = start; s < stop; ++s) {
        const auto row = static_cast<std::size_t>(order[s]);
        const auto x = data.features.row(row);
        const int label = data.labels[row];
        batch_loss += forward(p, x, label, w);

        for (int c = 0; c < p.n_classes(); ++c)
          w.dz2[static_cast<std::size_t>(c)] = w.probs[static_cast<std::size_t>(c)];
        w.dz2[static_cast<std::size_t>(label)] -= 1.0;
        for (int c = 0; c < p.n_classes(); ++c) {
          const double g = w.dz2[static_cast<std::size_t>(c)];
          gb2[static_cast<std::size_t>(c)] += g;
          for (int i = 0; i < p.hidden_dim(); ++i)
            gw2(c, i) += g * w.a1[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < p.hidden_dim(); ++i) {
          double da = 0.0;
          for (int c = 0; c < p.n_classes(); ++c)
            da += p.w2(c, i) * w.dz2[static_cast<std::size_t>(c)];
          const double a = w.a1[static_cast<std::size_t>(i)];
          w.dz1[static_cast<std::size_t>(i)] = da * (1.0 - a * a);
        }
        for (int i = 0; i < p.hidden_dim(); ++i) {
          const double g = w.dz1[static_cast<std::size_t>(i)];
          gb1[static_cast<std::size_t>(i)] += g;
          for (int j = 0; j < d; ++j) gw1(i, j) += g * x[static_cast<std::size_t>(j)];
        }
      }

      if (!std::isfinite(batch_loss))
        throw NumericalError("training diverged: non-finite loss at update " +
                             std::to_string(out.n_updates));

      const double scale = eta / nb;
      for (std::size_t i = 0; i < p.w1.data().size(); ++i) p.w1.data()[i] -= scale * gw1.data()[i];
      for (std::size_t i = 0; i < p.w2.data().size(); ++i) p.w2.data()[i] -= scale * gw2.data()[i];
      for (std::size_t i = 0; i < p.b1.size(); ++i) p.b1[i] -= scale * gb1[i];
      for (std::size_t i = 0; i < p.b2.size(); ++i) p.b2[i] -= scale * gb2[i];
      ++out.n_updates;
      clock.charge(update_charge);
    }
  }

  out.t_train_total = clock.now() - t0;
  out.params = std::move(p);
  return out;
}

double evaluate_accuracy(const ClassifierParams& params, const Matrix& x,
                         const std::vector<int>& y, Clock* clock) {
  if (x.rows() == 0 || y.size() != x.rows())
    throw ValidationError("evaluate_accuracy: empty or mismatched input");
  Workspace w;
  w.resize(params.hidden_dim(), params.n_classes());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (argmax_class(params, x.row(i), w) == y[i]) ++correct;
    if (clock) clock->charge(flops_per_sample_forward(params) * kSecondsPerFlop);
  }
  return static_cast<double>(correct) / static_cast<double>(x.rows());
}

Matrix input_gradients(const ClassifierParams& params, const Matrix& x,
                       const std::vector<int>& y) {
  Workspace w;
  w.resize(params.hidden_dim(), params.n_classes());
  Matrix grad(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    forward(params, x.row(r), y[r], w);
    for (int c = 0; c < params.n_classes(); ++c)
      w.dz2[static_cast<std::size_t>(c)] = w.probs[static_cast<std::size_t>(c)];
    w.dz2[static_cast<std::size_t>(y[r])] -= 1.0;
    for (int i = 0; i < params.hidden_dim(); ++i) {
      double da = 0.0;
      for (int c = 0; c < params.n_classes(); ++c)
        da += params.w2(c, i) * w.dz2[static_cast<std::size_t>(c)];
      const double a = w.a1[static_cast<std::size_t>(i)];
      w.dz1[static_cast<std::size_t>(i)] = da * (1.0 - a * a);
    }
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double g = 0.0;
      for (int i = 0; i < params.hidden_dim(); ++i)
        g += params.w1(i, static_cast<std::size_t>(j)) * w.dz1[static_cast<std::size_t>(i)];
      grad(r, j) = g;
    }
  }
  return grad;
}

double inference_charge_per_sample(const ClassifierParams& params) {
  return flops_per_sample_forward(params) * kSecondsPerFlop;
}

}  // namespace aftlab::lab
