#include "asf/cli.hpp"

int main(int argc, char** argv) { return asf::cli::run(argc, argv); }
