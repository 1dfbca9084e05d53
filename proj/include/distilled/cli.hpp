#ifndef DISTILLED_CLI_HPP
#define DISTILLED_CLI_HPP

#include <string>
#include <vector>

namespace distilled {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes: 0 success, 1 internal error or failed validation, 2 usage or
/// parameter error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args); ///< args[0] is the program name

} // namespace distilled

#endif // DISTILLED_CLI_HPP
