#include "picard/harness.hpp"

int main(int argc, char** argv) { return picard::cli_main(argc, argv); }
