// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tetherhop::cli {

/// Parses argv and dispatches to a subcommand. Exit status: 0 success,
/// 1 domain failure (infeasible hop, planner timeout, aborted episode),
/// 2 usage or config error.
int run_cli(int argc, const char* const* argv);

}  // namespace tetherhop::cli
