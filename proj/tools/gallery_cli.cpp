#include "gallery/cli.hpp"

int main(int argc, char** argv) { return gallery::cli_main(argc, argv); }
