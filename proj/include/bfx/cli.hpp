#pragma once

namespace bfx {

// Exit codes: 0 success / all checks passed, 1 a verification report
// failed, 2 usage or parse error.
int run_cli(int argc, const char* const* argv);

}  // namespace bfx
