#include "topocode/cli.hpp"

namespace topocode {
int run(int, char**) { return 2; }  // placeholder until subcommands land
}
