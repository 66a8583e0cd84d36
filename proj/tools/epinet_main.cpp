#include "epinets/cli.hpp"

int main(int argc, char** argv) { return epinets::cli::run(argc, argv); }
