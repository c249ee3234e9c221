#include "orthapt/transform.hpp"

#include "orthapt/logic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orthapt {

ExactUnitary::ExactUnitary(CMatrix matrix, bool conjugating)
    : matrix_(std::move(matrix)), conjugating_(conjugating) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
        throw dimension_error("ExactUnitary: matrix must be square and nonempty");
    if (!(matrix_.adjoint() * matrix_ == CMatrix::identity(matrix_.rows())))
        throw std::invalid_argument("ExactUnitary: matrix is not unitary");
}

ExactUnitary ExactUnitary::identity(int n, bool conjugating) {
    return ExactUnitary(CMatrix::identity(n), conjugating);
}

ExactUnitary plane_rotation(int n, int i, int j, const Rational& c, const Rational& s) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("plane_rotation: plane indices must be distinct and within range");
    const Rational norm = c * c + s * s;
    if (norm != 1)
        throw std::invalid_argument("plane_rotation: c^2 + s^2 must equal 1 exactly");
    CMatrix m = CMatrix::identity(n);
    m(i, i) = GaussianRational(c);
    m(j, j) = GaussianRational(c);
    m(i, j) = GaussianRational(Rational(-s));
    m(j, i) = GaussianRational(s);
    return ExactUnitary(std::move(m));
}

CVector apply(const ExactUnitary& u, const CVector& v) {
    if (static_cast<std::size_t>(u.n()) != v.size())
        throw dimension_error("apply: vector length differs from operator size");
    return mat_vec(u.matrix(), u.conjugating() ? conj(v) : v);
}

Subspace apply(const ExactUnitary& u, const Subspace& x) {
    if (u.n() != x.ambient()) throw dimension_error("apply: ambient mismatch");
    std::vector<CVector> images;
    images.reserve(x.basis().size());
    for (const auto& row : x.basis()) images.push_back(apply(u, row));
    return Subspace::span(x.ambient(), images);
}

GeometricApartment image_apartment(const ExactUnitary& u, const std::vector<CVector>& base, int k) {
    std::vector<CVector> image_base;
    image_base.reserve(base.size());
    for (const auto& v : base) image_base.push_back(apply(u, v));
    return GeometricApartment(std::move(image_base), k);
}

GeometricApartment image_apartment(const ExactUnitary& u, const GeometricApartment& apartment) {
    return image_apartment(u, apartment.base(), apartment.k());
}

MapFixture::MapFixture(int rank, std::vector<std::pair<Subspace, Subspace>> pairs,
                       std::string closed_under)
    : k_(rank), pairs_(std::move(pairs)), closed_under_(std::move(closed_under)) {
    if (k_ < 1) throw dimension_error("MapFixture: rank must be positive");
    std::set<Subspace> sources, images;
    for (const auto& [source, image] : pairs_) {
        if (source.dim() != k_ || image.dim() != k_)
            throw dimension_error("MapFixture: pair dimension differs from rank");
        if (!sources.insert(source).second)
            throw std::invalid_argument("MapFixture: duplicate source");
        if (!images.insert(image).second)
            throw std::invalid_argument("MapFixture: duplicate image");
    }
}

const Subspace* MapFixture::image_of(const Subspace& source) const {
    for (const auto& [src, img] : pairs_)
        if (src == source) return &img;
    return nullptr;
}

MapFixture MapFixture::with_images_swapped(std::size_t a, std::size_t b) const {
    if (a >= pairs_.size() || b >= pairs_.size())
        throw std::invalid_argument("with_images_swapped: position out of range");
    auto pairs = pairs_;
    std::swap(pairs[a].second, pairs[b].second);
    return MapFixture(k_, std::move(pairs), closed_under_ + ", images swapped at " +
                                                std::to_string(a) + "/" + std::to_string(b));
}

MapFixture MapFixture::with_image_replaced(std::size_t at, Subspace image) const {
    if (at >= pairs_.size()) throw std::invalid_argument("with_image_replaced: position out of range");
    auto pairs = pairs_;
    pairs[at].second = std::move(image);
    return MapFixture(k_, std::move(pairs),
                      closed_under_ + ", image replaced at " + std::to_string(at));
}

MapFixture fixture_from_unitary(const ExactUnitary& u, int k, const std::vector<Subspace>& sources,
                                std::string closed_under) {
    std::vector<std::pair<Subspace, Subspace>> pairs;
    pairs.reserve(sources.size());
    for (const auto& s : sources) pairs.emplace_back(s, apply(u, s));
    return MapFixture(k, std::move(pairs), std::move(closed_under));
}

MapFixture apartment_fixture(const ExactUnitary& u, const GeometricApartment& apartment) {
    return fixture_from_unitary(u, apartment.k(), apartment.members(), "apartment members");
}

static PreservationReport check_relation_preserving(
    const MapFixture& f, bool (*relation)(const Subspace&, const Subspace&)) {
    PreservationReport report;
    const auto& pairs = f.pairs();
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            ++report.pairs_checked;
            const bool on_sources = relation(pairs[a].first, pairs[b].first);
            const bool on_images = relation(pairs[a].second, pairs[b].second);
            if (on_sources != on_images)
                report.violations.push_back({a, b, on_sources, on_images});
        }
    return report;
}

PreservationReport check_compatibility_preserving(const MapFixture& f) {
    return check_relation_preserving(f, [](const Subspace& x, const Subspace& y) {
        return is_compatible(x, y);
    });
}

PreservationReport check_orthogonality_preserving(const MapFixture& f) {
    return check_relation_preserving(f, [](const Subspace& x, const Subspace& y) {
        return is_orthogonal(x, y);
    });
}

namespace {

// Does the image of `subset` under the member map `pi` equal `generate(q)`
// for some index pair q? Both sides are compared as sorted member lists.
bool image_is_generated(const std::vector<IndexMember>& subset,
                        const std::map<IndexMember, IndexMember>& pi, const ApartmentShape& shape,
                        std::vector<IndexMember> (*generate)(const ApartmentShape&,
                                                             const PairDescriptor&)) {
    std::vector<IndexMember> image;
    image.reserve(subset.size());
    for (IndexMember m : subset) image.push_back(pi.at(m));
    std::sort(image.begin(), image.end());
    for (const PairDescriptor& q : all_pairs(shape))
        if (generate(shape, q) == image) return true;
    return false;
}

} // namespace

PipelineReport pipeline_check(const MapFixture& f, const GeometricApartment& apartment) {
    const ApartmentShape shape = apartment.shape();
    const std::vector<IndexMember> masks = all_members(shape);
    std::vector<Subspace> sources, images;
    sources.reserve(masks.size());
    images.reserve(masks.size());
    for (IndexMember m : masks) {
        Subspace member = apartment.member(m);
        const Subspace* image = f.image_of(member);
        if (image == nullptr)
            throw std::invalid_argument("pipeline_check: fixture has no image for member " +
                                        member_to_string(m));
        sources.push_back(std::move(member));
        images.push_back(*image);
    }

    PipelineReport report;

    // (a) The image family must be a maximal mutually compatible family,
    // i.e. exactly the member set of the apartment of its minimal parts.
    FamilyAnalysis analysis = analyze_family(images, shape.k);
    report.apartment_image.ran = true;
    if (analysis.incompatible_pair) {
        report.apartment_image.detail =
            "images of " + member_to_string(masks[analysis.incompatible_pair->first]) + " and " +
            member_to_string(masks[analysis.incompatible_pair->second]) + " are not compatible";
    } else if (!analysis.report.is_maximal) {
        report.apartment_image.detail = "image family is not a maximal compatible family";
    } else {
        report.apartment_image.passed = true;
        report.apartment_image.detail = "images form an apartment member set";
    }

    if (report.apartment_image.passed) {
        // Rebuild the image apartment from the minimal parts (an orthogonal
        // base of lines) and express every image in its coordinates.
        std::vector<CVector> image_base;
        for (const Subspace& line : analysis.report.minimal_parts)
            image_base.push_back(primitive_scaled(line.basis().front()));
        const GeometricApartment image_apt(std::move(image_base), shape.k);
        std::map<IndexMember, IndexMember> pi;
        for (std::size_t idx = 0; idx < masks.size(); ++idx) {
            auto coord = coordinatize(image_apt, images[idx]);
            if (!coord) throw std::logic_error("pipeline_check: image family lost a member");
            pi[masks[idx]] = *coord;
        }

        report.maximal_inexact_images.ran = true;
        report.maximal_inexact_images.passed = true;
        report.complementary_images.ran = true;
        report.complementary_images.passed = true;
        for (const PairDescriptor& p : all_pairs(shape)) {
            if (report.maximal_inexact_images.passed &&
                !image_is_generated(maximal_inexact(shape, p), pi, shape, maximal_inexact)) {
                report.maximal_inexact_images.passed = false;
                report.maximal_inexact_images.detail =
                    "image of the maximal inexact subset of {" + std::to_string(p.i) + "," +
                    std::to_string(p.j) + "} is no maximal inexact subset";
            }
            if (report.complementary_images.passed &&
                !image_is_generated(complementary(shape, p), pi, shape, complementary)) {
                report.complementary_images.passed = false;
                report.complementary_images.detail =
                    "image of the complementary subset of {" + std::to_string(p.i) + "," +
                    std::to_string(p.j) + "} is no complementary subset";
            }
        }
        if (report.maximal_inexact_images.passed)
            report.maximal_inexact_images.detail = "all maximal inexact subsets preserved";
        if (report.complementary_images.passed)
            report.complementary_images.detail = "all complementary subsets preserved";

        report.pair_counts.ran = true;
        report.pair_counts.passed = true;
        for (std::size_t a = 0; a < masks.size() && report.pair_counts.passed; ++a)
            for (std::size_t b = a + 1; b < masks.size(); ++b) {
                const long before = count_complementary_containing(shape, masks[a], masks[b]);
                const long after = count_complementary_containing(shape, pi[masks[a]], pi[masks[b]]);
                if (before != after) {
                    report.pair_counts.passed = false;
                    report.pair_counts.detail =
                        "pair " + member_to_string(masks[a]) + ", " + member_to_string(masks[b]) +
                        ": count " + std::to_string(before) + " became " + std::to_string(after);
                    break;
                }
            }
        if (report.pair_counts.passed)
            report.pair_counts.detail = "all pair counts preserved";
    } else {
        const std::string skipped = "skipped: images do not form an apartment";
        report.maximal_inexact_images.detail = skipped;
        report.complementary_images.detail = skipped;
        report.pair_counts.detail = skipped;
    }

    // (e) Geometric orthogonality preservation runs regardless of (a).
    report.orthogonality.ran = true;
    report.orthogonality.passed = true;
    for (std::size_t a = 0; a < masks.size() && report.orthogonality.passed; ++a)
        for (std::size_t b = a + 1; b < masks.size(); ++b) {
            const bool before = is_orthogonal(sources[a], sources[b]);
            const bool after = is_orthogonal(images[a], images[b]);
            if (before != after) {
                report.orthogonality.passed = false;
                report.orthogonality.detail =
                    "pair " + member_to_string(masks[a]) + ", " + member_to_string(masks[b]) +
                    (before ? ": orthogonality lost" : ": orthogonality gained");
                break;
            }
        }
    if (report.orthogonality.passed)
        report.orthogonality.detail = "orthogonality preserved in both directions";

    return report;
}

} // namespace orthapt
