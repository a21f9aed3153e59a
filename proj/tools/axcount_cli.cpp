#include "axcount/cli.hpp"

int main(int argc, char** argv) { return axcount::run_cli(argc, argv); }
