#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eqg/weingarten.hpp"

namespace eqg {

inline constexpr const char* kToolVersion = "1.0.0";

/// Space-separated "i,j" pairs. Throws std::invalid_argument for a malformed
/// pair and std::out_of_range for an index outside 1..n.
MomentWord parse_word(std::string_view text, int n);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
}  // namespace exit_code

/// Runs one command line (without the program name). Results go to out, the
/// run log and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqg
