#include "cli.hpp"

int main(int argc, char** argv) { return topoprobe::cli::run(argc, argv); }
