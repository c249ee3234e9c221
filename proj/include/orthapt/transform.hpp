#pragma once

#include "orthapt/apartments.hpp"
#include "orthapt/linalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace orthapt {

/// An exact inner-product-preserving operator: a matrix U with U*·U = I,
/// optionally composed with entrywise conjugation of the input coordinates
/// (the `conjugating` flag models antilinear isometries; those reverse no
/// orthogonality but conjugate every inner product).
class ExactUnitary {
public:
    /// Validates U*·U = I exactly.
    ExactUnitary(CMatrix matrix, bool conjugating = false);

    static ExactUnitary identity(int n, bool conjugating = false);

    int n() const { return matrix_.rows(); }
    bool conjugating() const { return conjugating_; }
    const CMatrix& matrix() const { return matrix_; }

private:
    CMatrix matrix_;
    bool conjugating_;
};

/// Rotation by an exact angle inside the (i, j) coordinate plane, identity
/// elsewhere. Requires c² + s² = 1 (e.g. the rational pairs (3/5, 4/5) or
/// (5/13, 12/13)), which keeps the matrix exactly unitary.
ExactUnitary plane_rotation(int n, int i, int j, const Rational& c, const Rational& s);

/// U·v, conjugating the coordinates of v first when the flag is set.
CVector apply(const ExactUnitary& u, const CVector& v);

/// Image subspace {U·x : x in X}, in canonical form. Dimension,
/// orthogonality and compatibility are preserved.
Subspace apply(const ExactUnitary& u, const Subspace& x);

/// The apartment generated by the image base {U·e_i}.
GeometricApartment image_apartment(const ExactUnitary& u, const std::vector<CVector>& base, int k);
GeometricApartment image_apartment(const ExactUnitary& u, const GeometricApartment& apartment);

/// A finite family of (source, image) subspace pairs standing in for a
/// transformation of the rank-k subspaces. Sources are pairwise distinct,
/// images are pairwise distinct, and all dimensions equal k.
class MapFixture {
public:
    MapFixture(int rank, std::vector<std::pair<Subspace, Subspace>> pairs,
               std::string closed_under = "");

    int k() const { return k_; }
    const std::vector<std::pair<Subspace, Subspace>>& pairs() const { return pairs_; }
    /// Free-form note on how the pair family was generated.
    const std::string& closed_under() const { return closed_under_; }

    /// Image of a source subspace, if the fixture defines one.
    const Subspace* image_of(const Subspace& source) const;

    /// Copy with the images at two positions exchanged (sources untouched);
    /// the standard way to build a structure-breaking control fixture.
    MapFixture with_images_swapped(std::size_t a, std::size_t b) const;

    /// Copy with one image replaced.
    MapFixture with_image_replaced(std::size_t at, Subspace image) const;

private:
    int k_;
    std::vector<std::pair<Subspace, Subspace>> pairs_;
    std::string closed_under_;
};

/// Fixture mapping each source to its image under U.
MapFixture fixture_from_unitary(const ExactUnitary& u, int k, const std::vector<Subspace>& sources,
                                std::string closed_under = "unitary image");

/// Fixture defined on every member of the apartment.
MapFixture apartment_fixture(const ExactUnitary& u, const GeometricApartment& apartment);

/// One relation mismatch: the relation holds on the source pair but not on
/// the image pair, or vice versa. Positions index into the fixture.
struct PreservationViolation {
    std::size_t first;
    std::size_t second;
    bool holds_for_sources;
    bool holds_for_images;
};

struct PreservationReport {
    std::size_t pairs_checked = 0;
    std::vector<PreservationViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks is_compatible(X, Y) ⇔ is_compatible(f(X), f(Y)) over every
/// unordered pair of fixture entries. Violations are data, not errors.
PreservationReport check_compatibility_preserving(const MapFixture& f);

/// Same for is_orthogonal.
PreservationReport check_orthogonality_preserving(const MapFixture& f);

/// Verdict of one pipeline stage. `ran` is false when an earlier stage
/// failure makes the stage meaningless (no image apartment to compare
/// against); `detail` carries a witness on failure.
struct StageResult {
    bool ran = false;
    bool passed = false;
    std::string detail;
};

/// Staged decomposition of "f extends the apartment structure":
///  (a) images of the members form the member set of an apartment;
///  (b) images of maximal inexact subsets are maximal inexact subsets;
///  (c) images of complementary subsets are complementary subsets;
///  (d) every member pair keeps its complementary-subset count;
///  (e) orthogonality is preserved in both directions.
/// Stages (b)–(d) compare combinatorial coordinates relative to the image
/// apartment found in (a); stage (e) is geometric and always runs.
struct PipelineReport {
    StageResult apartment_image;
    StageResult maximal_inexact_images;
    StageResult complementary_images;
    StageResult pair_counts;
    StageResult orthogonality;

    bool all_passed() const {
        return apartment_image.passed && maximal_inexact_images.passed &&
               complementary_images.passed && pair_counts.passed && orthogonality.passed;
    }
};

/// Runs the five stages for a fixture covering every member of the
/// apartment (anything less is an error: the stages quantify over the full
/// member set).
PipelineReport pipeline_check(const MapFixture& f, const GeometricApartment& apartment);

} // namespace orthapt
