#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcoalg::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "lcoalg-report/1";

/// Exit codes of `run`.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (without the program name). Objects go to `out`,
/// diagnostics to `err`. Returns 0 when every check holds, 1 when one is
/// falsified and 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> command_names();

}  // namespace lcoalg::cli
