// Command-line front end: apartment statistics, degeneracy scans, and
// verification of subspace families and maps given as fixture files.
//
// Exit codes: 0 on success (all checks passed), 1 when a verification
// fails, 2 on usage or parse errors.

#include "orthapt/cli.hpp"
#include "orthapt/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

// Reads the whole file up front so parse errors can report line numbers
// without holding the stream open.
std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for orthogonal apartment combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();

    orthapt::CmdOptions options;
    std::string output_path;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write output to this file instead of stdout");
    app.add_flag("--allow-large", options.allow_large,
                 "Raise the built-in size caps (runs may take much longer)");

    int n = 0, k = 0, k_max = 0, n_max = 0;
    std::string fixture_path, subspace_path;

    CLI::App* stats = app.add_subcommand(
        "apartment-stats", "Member, pair, and meet-size statistics for a shape (n, k)");
    stats->add_option("n", n, "Ambient dimension")->required();
    stats->add_option("k", k, "Member rank")->required();

    CLI::App* scan = app.add_subcommand(
        "degeneracy-scan", "Scan shapes for meet sizes whose pair counts collide");
    scan->add_option("k_max", k_max, "Largest rank to scan")->required();
    scan->add_option("n_max", n_max, "Largest ambient dimension to scan")->required();

    CLI::App* check = app.add_subcommand(
        "check-map", "Check a source/image fixture for compatibility and orthogonality "
                     "preservation, plus the staged apartment pipeline when applicable");
    check->add_option("fixture", fixture_path, "Fixture file")->required();

    CLI::App* verify = app.add_subcommand(
        "verify-family", "Analyze a family of subspaces for mutual compatibility and "
                         "report its decomposition");
    verify->add_option("file", subspace_path, "Subspace file")->required();
    verify->add_option("k", k, "Expected rank of every member")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file_out;
        std::ostream* out = &std::cout;
        if (!output_path.empty()) {
            file_out.open(output_path);
            if (!file_out) throw std::invalid_argument("cannot open " + output_path);
            out = &file_out;
        }

        if (stats->parsed()) return orthapt::run_apartment_stats(n, k, options, *out);
        if (scan->parsed()) return orthapt::run_degeneracy_scan(k_max, n_max, options, *out);
        if (check->parsed()) {
            std::ifstream in = open_input(fixture_path);
            return orthapt::run_check_map(in, options, *out);
        }
        std::ifstream in = open_input(subspace_path);
        return orthapt::run_verify_family(in, k, options, *out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
