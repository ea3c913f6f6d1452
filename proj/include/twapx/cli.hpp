#pragma once

#include <ostream>

namespace twapx {

/// Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
/// 3 "the treewidth exceeds k-1" in fixed-k mode.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twapx
