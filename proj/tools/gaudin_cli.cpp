#include "gaudin/cli.hpp"

int main(int argc, char** argv) { return gaudin::cli::run(argc, argv); }
