#include <string>
#include <vector>

#include "tww/cli.hpp"

int main(int argc, char** argv) {
  return tww::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
