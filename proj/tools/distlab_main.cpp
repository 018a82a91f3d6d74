#include "distlab/cli.hpp"

int main(int argc, char** argv) { return distlab::run(argc, argv); }
