#include "flatchain/cli.hpp"

int main(int argc, char** argv) { return flatchain::run_cli(argc, argv); }
