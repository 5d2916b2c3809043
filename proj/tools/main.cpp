// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/cli/commands.hpp"

int main(int argc, char** argv) {
  return tetherhop::cli::run_cli(argc, argv);
}
