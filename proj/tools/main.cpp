#include <iostream>
#include <string>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rabot::run(args, std::cout, std::cerr, rabot::CliEnvironment::from_process());
}
