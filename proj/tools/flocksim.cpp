#include "flock/config_io.hpp"

int main(int argc, char** argv) { return flock::run_main(argc, argv); }
