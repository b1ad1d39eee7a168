#include "sumclust/io.hpp"

int main(int argc, char** argv) { return sumclust::run_cli(argc, argv); }
