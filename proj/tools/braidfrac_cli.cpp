#include <iostream>

#include "braidfrac/cli.hpp"

int main(int argc, char** argv) {
  braidfrac::CliResult r = braidfrac::run_cli(std::vector<std::string>(argv, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
