//
// Project camd - Copyright 2026 The camd Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAMD_CLI_HPP
#define CAMD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace camd {

/// Exit codes: 0 success, 2 infeasible or failed checks, 3 parse error,
/// 4 internal error. Reports go to `out`, diagnostics and timing to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace camd

#endif  // CAMD_CLI_HPP
