#include <iostream>

#include "tlg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  tlg::CliResult r = tlg::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
