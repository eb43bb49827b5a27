// Test driver for the command-line tool. The harness passes the binary
// under test as --cli=PATH; everything else goes to doctest unchanged.
#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdlib>
#include <cstring>
#include <vector>

#include "doctest.h"

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--cli=", 6) == 0) {
      ::setenv("BINGO_CLI", argv[i] + 6, 1);
    } else {
      args.push_back(argv[i]);
    }
  }
  doctest::Context context(static_cast<int>(args.size()), args.data());
  return context.run();
}
