#include "cli.hpp"

int main(int argc, char** argv) { return looplab::cli::run(argc, argv); }
