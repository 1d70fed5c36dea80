#include "catomo/cli.hpp"

int main(int argc, char** argv) { return catomo::cli::main_with_args(argc, argv); }
