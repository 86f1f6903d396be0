#include "czekan/cli.hpp"

int main(int argc, char** argv) { return czekan::cli::run(argc, argv); }
