#include <string>
#include <vector>

#include "termite/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return termite::cli::run(args);
}
