#pragma once

namespace aftlab {

// Time source for all lab measurements. Real runs use SteadyClock; tests and
// reproducible studies inject SimClock, which only advances via charge().
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now() const = 0;              // seconds, monotonic
  virtual void charge(double /*seconds*/) {}   // simulated work; no-op on real clocks
};

class SteadyClock final : public Clock {
 public:
  double now() const override;
};

// Virtual clock advanced only by charge(); deterministic across runs.
// speed_factor scales every charge, standing in for slower or faster devices.
class SimClock final : public Clock {
 public:
  explicit SimClock(double speed_factor = 1.0) : speed_(speed_factor) {}
  double now() const override { return t_; }
  void charge(double seconds) override { t_ += seconds * speed_; }

 private:
  double speed_;
  double t_ = 0.0;
};

}  // namespace aftlab
