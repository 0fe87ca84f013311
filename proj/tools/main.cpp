#include "gripsim/cli.hpp"

int main(int argc, char** argv) { return gripsim::run_cli(argc, argv); }
