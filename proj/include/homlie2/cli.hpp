#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie2::cli {

// Exit codes: 0 pass, 1 mathematical failure, 2 usage or format error.
// The JSON report goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace homlie2::cli
