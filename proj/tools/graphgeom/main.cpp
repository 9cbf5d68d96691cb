#include <string>
#include <vector>

#include "graphgeom/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graphgeom::cli::run_command(args);
}
