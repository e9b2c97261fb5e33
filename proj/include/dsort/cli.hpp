// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsort::cli {

/// Process exit codes. Anything not listed (bad flags, unreadable files,
/// malformed numbers) is reported as ParseError.
enum ExitCode : int {
    Ok = 0,
    ParseError = 1,
    KeyOutOfRange = 2,
    DuplicateKey = 3,
    RangeTooLarge = 4,
    UndefinedExponent = 5,
    NonPowerOfTwoWorkers = 6,
    InfeasibleGeneration = 7,
};

/// Runs one invocation. args[0] is the program name. Standard streams
/// are used where no --input / --output file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace dsort::cli
