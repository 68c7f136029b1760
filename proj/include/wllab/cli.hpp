//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wllab {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,        ///< indistinguishable / predicate true / PASS
  kExitNegative = 1,  ///< distinguishable / predicate false / FAIL
  kExitInput = 2,     ///< bad arguments or unreadable / invalid input
  kExitCapacity = 3,  ///< a size limit was exceeded
  kExitInternal = 4,  ///< unexpected failure
};

/// Runs the `wllab` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace wllab
