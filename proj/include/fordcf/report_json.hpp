#pragma once

#include "fordcf/verify.hpp"

#include <json.hpp>

namespace fordcf {

/// Keys: x, alpha, isInteger, stmt_i ... stmt_v, witness (null when absent),
/// consistent.
nlohmann::ordered_json to_json(const TheoremUReport& report);

/// Keys: params, totalChecked, inconsistencies, elapsed, plus sweep counters.
nlohmann::ordered_json to_json(const SweepReport& report);

}  // namespace fordcf
