#pragma once

#include <iosfwd>

namespace fordcf {

/// Command-line driver. Exit status: 0 on success and consistent checks,
/// 2 when a check or sweep finds an inconsistency, 1 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fordcf
