#pragma once

#include "orthapt/linalg.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace orthapt {

/// Raised when a family handed to analyze_compatible_family contains a pair
/// that fails is_compatible; carries the positions of the offending pair.
struct incompatibility_error : std::invalid_argument {
    incompatibility_error(std::size_t first_pos, std::size_t second_pos)
        : std::invalid_argument("family members at positions " + std::to_string(first_pos) +
                                " and " + std::to_string(second_pos) + " are not compatible"),
          first(first_pos),
          second(second_pos) {}

    std::size_t first;
    std::size_t second;
};

/// True iff X and Y decompose each other orthogonally:
/// X = (X∩Y) + (X∩Y⊥) and Y = (X∩Y) + (Y∩X⊥).
/// Symmetric, reflexive, and equivalent to exact commutation of the two
/// orthogonal projectors (the latter is kept as an independent test oracle).
bool is_compatible(const Subspace& x, const Subspace& y);

/// All inclusion-minimal nonzero subspaces obtainable by intersecting one or
/// more family members. Computed by closing the family under pairwise
/// intersection (with canonical-form deduplication) and then filtering the
/// minimal elements; the result is sorted in canonical order.
std::vector<Subspace> minimal_intersections(const std::vector<Subspace>& family);

/// Structural breakdown of a mutually compatible family of k-dimensional
/// subspaces. The family is a maximal mutually compatible set exactly when
/// its minimal intersection parts form a full orthogonal base of lines,
/// every member is a sum of parts, and every k-subset span is present.
struct CompatibleFamilyReport {
    std::vector<Subspace> minimal_parts;
    bool all_lines = false;            // every part is one-dimensional
    bool mutually_orthogonal = false;  // parts are pairwise orthogonal
    bool spans_ambient = false;        // parts sum to the whole space
    bool members_decompose = false;    // each member is a sum of parts
    bool cardinality_complete = false; // all C(n,k) spans are present
    bool is_maximal = false;           // conjunction of the five flags above
};

/// Like analyze_compatible_family, but an incompatible pair is reported as
/// data instead of thrown. When incompatible_pair is set, the report flags
/// are all false and minimal_parts is empty.
struct FamilyAnalysis {
    CompatibleFamilyReport report;
    std::optional<std::pair<std::size_t, std::size_t>> incompatible_pair;
};

FamilyAnalysis analyze_family(const std::vector<Subspace>& family, int k);

/// Precondition: family nonempty, every member k-dimensional, every pair
/// compatible (violation throws incompatibility_error with the witness
/// positions). Returns the filled CompatibleFamilyReport.
CompatibleFamilyReport analyze_compatible_family(const std::vector<Subspace>& family, int k);

/// For orthogonal k-dimensional X, Y: an orthogonal base of the ambient
/// space whose first k vectors span X and next k span Y, completed on the
/// orthocomplement of X+Y. Square-root-free: vectors are orthogonal with
/// primitive integer coordinates, not normalized.
std::vector<CVector> extend_pair_to_orthogonal_base(const Subspace& x, const Subspace& y);

} // namespace orthapt
