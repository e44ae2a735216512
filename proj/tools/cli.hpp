#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qfe/families.hpp"

namespace qfe::cli {

enum class Command { Numbers, Poly, Expand, Verify, Carlitz };
enum class OutputFormat { Plain, Json, Latex };
enum class CarlitzTask { Numbers, Poly, Expand };

struct CliConfig {
    Command command = Command::Numbers;
    FamilyId family;
    std::size_t n = 4;
    std::size_t max_n = 6;
    unsigned max_r = 3;
    std::optional<Rational> q;       // nullopt: symbolic
    std::optional<Rational> lambda;  // nullopt: symbolic
    OutputFormat format = OutputFormat::Plain;
    std::uint64_t seed = 1;
    std::size_t trials = 5;
    std::string poly;                // expression text (already read from file if a path was given)
    FamilyId basis;
    std::vector<std::string> suite;  // empty: every registered identity
    FieldMode verify_mode = FieldMode::SymbolicQLambda;
    CarlitzTask carlitz = CarlitzTask::Numbers;
    unsigned threads = 0;
    std::size_t max_order = 64;      // QFE_MAX_ORDER
};

/// Parses argv into cfg. Returns an exit code when the process should stop
/// (help printed, or a usage error already reported on err).
std::optional<int> parse_args(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out,
                              std::ostream& err);

/// Runs a parsed command: 0 success, 1 verification failure, 2 usage or input error.
int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args followed by run_command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfe::cli
