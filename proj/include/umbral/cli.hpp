#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral {

enum ExitCode { ExitOk = 0, ExitVerifyFailed = 1, ExitUsage = 2, ExitData = 3 };

// runs one command line (args excludes the program name) and returns the exit status
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral
