#include <cstdio>

#include "adelic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = adelic::cli::run(args);
  std::fputs(res.text.c_str(), stdout);
  return res.exit_code;
}
