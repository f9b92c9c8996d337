#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgap::cli {

/// Exit codes: 0 pass / LEQ / true, 1 property failure / NLEQ / false,
/// 2 usage or parse error.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs the kgap command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgap::cli
