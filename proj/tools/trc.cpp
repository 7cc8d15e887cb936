// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <iostream>

#include "trc/cli/commands.hpp"

int main(int argc, char** argv) { return trc::cli::run(argc, argv, std::cout, std::cerr); }
