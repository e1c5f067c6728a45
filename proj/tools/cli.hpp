#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqx::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotSatisfied = 1;   // verification or checked notion failed
inline constexpr int kPrecondition = 2;   // algorithm or method precondition
inline constexpr int kInputError = 3;     // unreadable or malformed input, shape mismatch
inline constexpr int kBudget = 4;         // enumeration, state or step budget
inline constexpr int kInternal = 5;       // invariant failure

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// diagnostics and the human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqx::cli
