#pragma once

#include <string>
#include <vector>

namespace gallery {

// Command-line entry point. Exit codes: 0 success / claim holds,
// 2 claim fails, 3 input or validation error, 4 usage error.
int cli_main(int argc, char** argv);
int cli_main(const std::vector<std::string>& args);

}  // namespace gallery
