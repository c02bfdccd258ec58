#pragma once

#include "ruleorder/harness.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ruleorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

class PermutationParseError : public std::runtime_error {
public:
    PermutationParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses the rank list format: a single data line of comma-separated ranks
/// by rule id ("2,0,1" puts rule 0 at rank 2). Blank lines and lines starting
/// with '#' are skipped. Errors carry the 1-based line number.
std::vector<std::uint32_t> parse_permutation(std::string_view text);

/// Non-zero when a trial violated the correctness invariant.
int exit_code_for(const TrialResult& t) noexcept;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ruleorder::cli
