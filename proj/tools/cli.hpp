#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace umbral::cli {

// Exit codes: 0 ok, 1 usage / parse / bad input, 2 math failure, 3 I/O.
enum Exit { kOk = 0, kUsage = 1, kMath = 2, kIo = 3 };

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace umbral::cli
