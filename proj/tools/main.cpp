#include "dctri/cli.hpp"

int main(int argc, char** argv) { return dctri::cli::run(argc, argv); }
