#include "commands.hpp"

int main(int argc, char** argv) { return polyharm::cli::run(argc, argv); }
