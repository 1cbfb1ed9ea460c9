#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folia {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitInconsistent = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folia
