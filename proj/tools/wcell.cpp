#include "wcell/cli.hpp"

int main(int argc, char** argv) { return wcell::cli::run(argc, argv); }
