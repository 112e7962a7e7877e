#include <iostream>
#include <string>
#include <vector>

#include "dicut/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dicut::run_command(args, std::cout, std::cerr);
}
