#pragma once

#include <iosfwd>
#include <string>

namespace orthapt {

/// Options shared by every subcommand. `format` is "text" or "structured"
/// (one JSON document with a versioned `schema` field); `allow_large`
/// unlocks parameter ranges beyond the ~10-second defaults.
struct CmdOptions {
    std::string format = "text";
    bool allow_large = false;
};

/// The run functions return the process exit status: 0 for success /
/// all checks passed, 1 for a verification failure. Usage and parse
/// problems are thrown (std::invalid_argument and subclasses) and mapped
/// to exit status 2 by the binary.

/// Member count, per-meet-size counts, and pairwise intersection statistics
/// of the maximal inexact and complementary subsets at shape (n, k).
int run_apartment_stats(int n, int k, const CmdOptions& opt, std::ostream& out);

/// Table of meet-size count collisions over 2 <= k <= k_max,
/// k+2 <= n <= n_max, each row tagged with its band (n = 2k±2 or other).
int run_degeneracy_scan(int k_max, int n_max, const CmdOptions& opt, std::ostream& out);

/// Compatibility/orthogonality preservation for the fixture, plus the full
/// staged pipeline when the fixture covers every member of the standard
/// apartment of its (n, k).
int run_check_map(std::istream& fixture_file, const CmdOptions& opt, std::ostream& out);

/// Maximal-compatible-family analysis of the subspaces in the file, read as
/// one family of rank k.
int run_verify_family(std::istream& subspace_file, int k, const CmdOptions& opt, std::ostream& out);

} // namespace orthapt
