#include "intz/cli.hpp"

int main(int argc, char** argv) { return intz::cli::run(argc, argv); }
