#include <string>
#include <vector>

#include "loopss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loopss::run_cli(args);
}
