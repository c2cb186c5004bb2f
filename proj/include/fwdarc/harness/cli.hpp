#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fwdarc::harness {

// Entry point of the fwdarc tool. args excludes the program name. The
// return value is the process exit code (0 solved, 2 no structure,
// 3 input or class error, 4 internal or verification failure).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fwdarc::harness
