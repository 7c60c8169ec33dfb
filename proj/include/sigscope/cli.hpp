#pragma once

#include <string>
#include <vector>

namespace sigscope {

// Exit codes: 0 success, 1 validation error, 2 hard-check failure under --check.
int cli_main(int argc, char** argv);

// Convenience wrapper for tests: args without the program name.
int cli_main(const std::vector<std::string>& args);

}
