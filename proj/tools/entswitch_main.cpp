// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return entswitch::cli::run(args, std::cout, std::cerr);
}
