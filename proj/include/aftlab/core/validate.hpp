#pragma once

#include <string>
#include <vector>

#include "aftlab/core/types.hpp"

namespace aftlab {

// Returns every violated invariant of the record; empty means valid.
// Total: never throws on any input, including NaN and infinities.
std::vector<std::string> validate_trial(const TrialRecord& rec);

inline bool is_valid(const TrialRecord& rec) { return validate_trial(rec).empty(); }

}  // namespace aftlab
