#include "opineq/cli.hpp"

int main(int argc, char** argv) { return opineq::cli::main(argc, argv); }
