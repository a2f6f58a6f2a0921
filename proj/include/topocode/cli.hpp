#pragma once

namespace topocode {
int run(int argc, char** argv);
}
