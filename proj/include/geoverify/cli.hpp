#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoverify {

/// Exit codes of the verify command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of `verify <check-name>|all [options]`. `args` excludes the
/// program name. Summary lines go to `out`, diagnostics to `err`.
int verify_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoverify
