#include <iostream>

#include "owakit/cli.hpp"

int main(int argc, char** argv) { return owakit::cli_main(argc, argv, std::cout, std::cerr); }
