#include "gravent/cli.hpp"

int main(int argc, char** argv) { return gravent::cli::main(argc, argv); }
