#include "spinkerr/sweep.hpp"

int main(int argc, char** argv) { return spinkerr::cli_main(argc, argv); }
