#include <string>
#include <vector>

#include "negchain/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return negchain::run_command(args);
}
