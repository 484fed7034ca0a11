#include <string>
#include <vector>

#include "dcs_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dcs::cli::parse_and_dispatch(args);
}
