#include "aftlab/core/clock.hpp"

#include <chrono>

namespace aftlab {

double SteadyClock::now() const {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace aftlab
