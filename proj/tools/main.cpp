#include "cli.hpp"

int main(int argc, char** argv) { return kisinlab::cli::run_cli(argc, argv); }
