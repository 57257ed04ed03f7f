#pragma once

#include <iosfwd>

namespace taulab {

/// Exit status: 0 when every check passes, 1 on a failed claim or check,
/// 2 on a usage or configuration error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace taulab
