#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hetcat {

// Runs one CLI invocation; args excludes the program name. Results go to
// out, diagnostics to err. Exit status: 0 success/verified, 1 negative
// mathematical result (e.g. not representable), 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hetcat
