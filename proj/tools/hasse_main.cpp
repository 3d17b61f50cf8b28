#include "hasse/cli.hpp"

int main(int argc, char** argv) { return hasse::cli_main(argc, argv); }
