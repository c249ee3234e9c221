#pragma once

#include "orthapt/linalg.hpp"
#include "orthapt/transform.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace orthapt {

/// File-format violation, carrying the 1-based line number (0 for errors
/// about the file as a whole, e.g. a missing header).
struct parse_error : std::invalid_argument {
    parse_error(int line_number, const std::string& message)
        : std::invalid_argument("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    int line;
};

/// Scalar entry grammar: `<rat>`, `<rat>+<rat>i` or `<rat>-<rat>i`, where
/// `<rat>` is `p` or `p/q` with integer p and positive integer q.
/// Examples: `3`, `-1/2`, `0+1i`, `2/3-4/5i`.
GaussianRational parse_entry(const std::string& token);

/// Canonical rendering of the entry grammar: lowest terms, no spaces,
/// imaginary part only when nonzero.
std::string format_entry(const GaussianRational& z);

/// Text form of a subspace collection:
///   ambient <n>
///   subspace <name>
///   vector <entry> ... <entry>     (n entries; repeated per basis vector)
/// Blank lines and lines starting with `#` are ignored. Subspaces are
/// canonicalized on parse, so printing a parsed file reproduces it byte for
/// byte whenever the file already held canonical basis rows.
struct SubspaceFileData {
    int ambient = 0;
    std::vector<std::pair<std::string, Subspace>> blocks;
};

SubspaceFileData parse_subspace_file(std::istream& in);
std::string print_subspace_file(const SubspaceFileData& data);

/// Text form of a transformation fixture:
///   rank <k>
///   ambient <n>
/// followed either by repeated explicit pairs
///   pair
///   source
///   vector ...        (basis of the source)
///   image
///   vector ...        (basis of the image)
/// or by a single operator block
///   unitary [conjugate]
///   row <entry> ... <entry>        (n rows of n entries)
/// which generates one pair per member of the standard apartment of
/// (n, k): sources are the coordinate k-subset spans, images their images
/// under the operator.
struct FixtureFileData {
    int ambient;
    MapFixture fixture;
};

FixtureFileData parse_fixture_file(std::istream& in);

} // namespace orthapt
