// Command implementations behind the divknot executable.
#ifndef DIVKNOT_CLI_HPP
#define DIVKNOT_CLI_HPP

#include "divknot/defect.hpp"

#include <optional>
#include <string>
#include <utility>

namespace divknot::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kValidation = 2, kIo = 3, kInternal = 4 };

enum class OutputFormat { Text, Json };

struct RunManifest {
    std::string command;  // validate | report | family
    std::optional<std::string> gauss;
    std::optional<std::string> file;
    std::optional<int> snail;
    std::optional<std::pair<int, int>> range;
    bool swap_colours = false;
    std::optional<std::size_t> black;
    SearchConfig search;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> out_path;
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string output;       // stdout or --out payload
    std::string diagnostics;  // stderr
};

/// Parses `a..b` (inclusive, 1 <= a <= b).
std::pair<int, int> parse_range(const std::string& text);

CommandResult cmd_validate(const RunManifest& manifest);
CommandResult cmd_report(const RunManifest& manifest);
CommandResult cmd_family(const RunManifest& manifest);

/// Dispatches on manifest.command and writes the output to --out when given.
CommandResult run(const RunManifest& manifest);

}  // namespace divknot::cli

#endif  // DIVKNOT_CLI_HPP
