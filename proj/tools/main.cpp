#include "midspec_cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return midspec::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
