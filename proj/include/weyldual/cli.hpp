#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weyldual {

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 when a verdict is FAIL or INCONCLUSIVE or a computation fails, and 2 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyldual
