#include "homlie2/cli.hpp"

int main(int argc, char** argv) { return homlie2::cli::run(argc, argv); }
