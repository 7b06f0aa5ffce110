#pragma once

#include <ostream>

namespace trimer {

/// Entry point of the `trimer` executable. Returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace trimer
