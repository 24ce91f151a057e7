#include "palinprime/cli.hpp"

int main(int argc, char** argv) { return palinprime::cli::run(argc, argv); }
