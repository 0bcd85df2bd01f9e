#pragma once

#include "superaff/rootdata.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superaff::cli {

/// Malformed command line or algebra name (exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr const char* schema_version = "1";

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_rejected_level = 3;

enum class Subcommand { Levels, Roots, Weyl, Classify, Verify, Witness };
enum class Format { Json, Table };

struct CommandSpec {
    Subcommand subcommand = Subcommand::Verify;
    std::string algebra;
    std::optional<int> u;
    std::optional<int> u_max;
    std::optional<std::pair<int, int>> u_range;
    Format format = Format::Json;
    /// Run classify/verify at h∨/u - h∨ even when u fails the coprimality test.
    bool unchecked_level = false;
};

struct RunResult {
    int exit_code = exit_ok;
    std::string output;  // rendered document (JSON or table)
};

/// Grammar: sl(n|m), sl(n), osp(M|2n), F(4), G(3), sp(4), g2. Case and whitespace insensitive.
FamilySpec parse_algebra(const std::string& name);

/// The fixed desk-scale roster behind the "all-desk" alias.
const std::vector<std::string>& desk_roster();

/// Parses "a..b".
std::pair<int, int> parse_u_range(const std::string& text);

RunResult run(const CommandSpec& spec);

/// Full command-line entry point; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace superaff::cli
