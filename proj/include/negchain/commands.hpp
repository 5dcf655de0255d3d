#ifndef NEGCHAIN_COMMANDS_HPP
#define NEGCHAIN_COMMANDS_HPP

#include <string>
#include <vector>

namespace negchain {

// Command-line entry point. args excludes the program name. Returns 0 on
// success, 1 on validation/parse errors, 2 on numerical or I/O failure.
int run_command(const std::vector<std::string>& args);

} // namespace negchain

#endif
