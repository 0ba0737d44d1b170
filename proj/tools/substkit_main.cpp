#include "subst/cli.hpp"

int main(int argc, char** argv) { return subst::cli::run(argc, argv); }
