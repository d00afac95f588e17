// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ramcong/cli.hpp"

int main(int argc, char** argv) { return ramcong::run_cli(argc, argv, std::cout, std::cerr); }
