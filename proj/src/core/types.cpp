#include "aftlab/core/types.hpp"

#include "aftlab/core/error.hpp"

namespace aftlab {

std::vector<HardwareProfile> default_hardware_profiles() {
  return {
      {"V100", 2.55, 250.0, 900.0},
      {"P100", 1.60, 250.0, 732.0},
      {"L4", 0.81, 72.0, 300.0},
  };
}

const HardwareProfile& find_profile(const std::vector<HardwareProfile>& profiles,
                                    const std::string& name) {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw DataError("unknown hardware profile: " + name);
}

}  // namespace aftlab
