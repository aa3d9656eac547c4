#include "lienil/cli.hpp"

int main(int argc, char** argv) { return lienil::cli_main(argc, argv); }
