#include <string>
#include <vector>

#include "jointgamma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jointgamma::cli::run(args);
}
