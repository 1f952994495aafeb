#include "gridnls/cli.hpp"

int main(int argc, char** argv) { return gridnls::cli::run_cli(argc, argv); }
