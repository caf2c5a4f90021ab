#include "divknot/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_input_options(CLI::App& cmd, divknot::cli::RunManifest& m) {
    cmd.add_option("--gauss", m.gauss, "Signed Gauss code, e.g. \"v1+ v1+\"");
    cmd.add_option("--file", m.file, "Divide file (gauss:/black: lines)");
    cmd.add_option("--snail", m.snail, "Snail divide with n double points")->check(CLI::PositiveNumber);
    cmd.add_flag("--swap-colours", m.swap_colours, "Invert the checkerboard colouring");
    cmd.add_option("--black", m.black, "Region id to colour black");
    cmd.add_flag("--json", [&m](std::int64_t) { m.format = divknot::cli::OutputFormat::Json; }, "Emit JSON");
    cmd.add_option("--out", m.out_path, "Write the output here instead of stdout");
}

void add_search_options(CLI::App& cmd, divknot::cli::RunManifest& m) {
    cmd.add_option("--coeff-bound", m.search.coeff_bound, "Coefficient box for the sublattice search")
        ->capture_default_str();
    cmd.add_option("--time-budget", m.search.time_budget_seconds, "Search time budget in seconds")
        ->capture_default_str();
    cmd.add_option("--max-candidates", m.search.max_candidates, "Cap on enumerated box vectors")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert forms, invariants and four-genus bounds of divide knots"};
    app.require_subcommand(1);
    divknot::cli::RunManifest manifest;

    auto* validate = app.add_subcommand("validate", "Check that a signed Gauss code is realizable in the disc");
    add_input_options(*validate, manifest);

    auto* report = app.add_subcommand("report", "Seifert matrix, invariants and topological four-genus bounds");
    add_input_options(*report, manifest);
    add_search_options(*report, manifest);

    auto* family = app.add_subcommand("family", "Bounds table for the snail family");
    std::string range;
    family->add_option("--range", range, "Range a..b of snail sizes")->required();
    family->add_flag("--json", [&manifest](std::int64_t) { manifest.format = divknot::cli::OutputFormat::Json; },
                     "Emit JSON");
    family->add_option("--out", manifest.out_path, "Write the output here instead of stdout");
    add_search_options(*family, manifest);

    CLI11_PARSE(app, argc, argv);

    manifest.command = app.get_subcommands().front()->get_name();
    if (manifest.command == "family") {
        try {
            manifest.range = divknot::cli::parse_range(range);
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return divknot::cli::kUsage;
        }
    }

    const auto result = divknot::cli::run(manifest);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
