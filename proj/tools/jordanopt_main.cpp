#include "jordanopt/cli.hpp"

int main(int argc, char** argv) { return jordanopt::cli_run(argc, argv); }
