#include "topocode/cli.hpp"

int main(int argc, char** argv) { return topocode::run(argc, argv); }
