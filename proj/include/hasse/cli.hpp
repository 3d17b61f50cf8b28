#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hasse {

// Command-line driver. Exit codes: 0 success, 1 usage error, 2 input
// validation failure, 3 embedding validation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace hasse
