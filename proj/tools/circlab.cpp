#include "circlab/cli.hpp"

int main(int argc, char** argv) { return circlab::run_cli(argc, argv); }
