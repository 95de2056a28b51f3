#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itea {

// Full CLI entry point. args excludes the program name. Streams are
// injectable so the CLI is testable in-process; the binary forwards
// std::cout/std::cerr.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv);

} // namespace itea
