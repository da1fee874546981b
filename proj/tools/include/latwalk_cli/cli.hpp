#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latwalk::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 invalid invocation or
/// parameter, 3 resource or numerical failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime = 3;

inline constexpr int max_m_3d = 24;
inline constexpr int max_m_default = 40;

/// Runs one invocation; args excludes the program name. Data goes to out
/// unless --out is given, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latwalk::cli
