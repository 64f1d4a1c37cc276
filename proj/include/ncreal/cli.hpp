// SPDX-License-Identifier: Apache-2.0

#ifndef NCREAL_CLI_HPP
#define NCREAL_CLI_HPP

#include <ostream>

namespace ncreal::cli
{

/// Exit codes shared by every subcommand.
enum ExitCode : int
{
  kOk = 0,
  kInputError = 2,
  kDomainViolation = 3,
  kInfeasible = 4,
};

/// Entry point of the `ncreal` tool. The JSON report goes to `out` (or to --out), a short
/// human-readable summary to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ncreal::cli

#endif  // NCREAL_CLI_HPP
