#include "pdr/cli.hpp"

int main(int argc, char** argv) { return pdr::dispatch(argc, argv); }
