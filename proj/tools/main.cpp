#include "cli.hpp"

int main(int argc, char** argv) { return mforge::cli::run(argc, argv); }
