#include "cycgrp/cli.hpp"

int main(int argc, char** argv) { return cycgrp::cli_main(argc, argv); }
