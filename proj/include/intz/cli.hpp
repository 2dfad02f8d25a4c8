#pragma once

#include <iostream>

namespace intz::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs one command line. Payloads go to `out`, logs and usage to `err`.
int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace intz::cli
