#include "orthapt/cli.hpp"

#include "orthapt/apartments.hpp"
#include "orthapt/io.hpp"
#include "orthapt/kernels.hpp"
#include "orthapt/logic.hpp"
#include "orthapt/transform.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace orthapt {

namespace {

using ordered_json = nlohmann::ordered_json;

bool structured(const CmdOptions& opt) {
    if (opt.format == "structured") return true;
    if (opt.format == "text") return false;
    throw std::invalid_argument("format must be 'text' or 'structured'");
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

// Distinct member lists of a pair-indexed subset system, in a fixed order.
std::vector<std::vector<IndexMember>> distinct_sets(
    const ApartmentShape& shape,
    std::vector<IndexMember> (*generate)(const ApartmentShape&, const PairDescriptor&)) {
    std::set<std::vector<IndexMember>> seen;
    for (const PairDescriptor& p : all_pairs(shape)) seen.insert(generate(shape, p));
    return {seen.begin(), seen.end()};
}

// size -> number of unordered distinct-set pairs with that intersection size.
std::map<int, long> intersection_histogram(const std::vector<std::vector<IndexMember>>& sets) {
    const std::vector<int> table = pairwise_intersection_sizes(sets);
    std::map<int, long> hist;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) ++hist[table[a * sets.size() + b]];
    return hist;
}

ordered_json histogram_json(const std::map<int, long>& hist) {
    ordered_json rows = ordered_json::array();
    for (const auto& [size, pairs] : hist) rows.push_back({{"size", size}, {"set_pairs", pairs}});
    return rows;
}

struct SubsetSystemStats {
    std::size_t generated;
    std::size_t distinct;
    std::size_t subset_size;
    std::map<int, long> histogram;
};

SubsetSystemStats subset_system_stats(
    const ApartmentShape& shape,
    std::vector<IndexMember> (*generate)(const ApartmentShape&, const PairDescriptor&)) {
    SubsetSystemStats stats;
    stats.generated = all_pairs(shape).size();
    const auto sets = distinct_sets(shape, generate);
    stats.distinct = sets.size();
    stats.subset_size = sets.empty() ? 0 : sets.front().size();
    stats.histogram = intersection_histogram(sets);
    return stats;
}

ordered_json subset_system_json(const SubsetSystemStats& s) {
    return {{"generated", s.generated},
            {"distinct", s.distinct},
            {"subset_size", s.subset_size},
            {"intersection_histogram", histogram_json(s.histogram)}};
}

void print_subset_system(std::ostream& out, const char* label, const SubsetSystemStats& s) {
    out << label << ": " << s.generated << " generated, " << s.distinct
        << " distinct, each of size " << s.subset_size << "\n";
    for (const auto& [size, pairs] : s.histogram)
        out << "  intersection size " << size << ": " << pairs << " set pairs\n";
}

} // namespace

int run_apartment_stats(int n, int k, const CmdOptions& opt, std::ostream& out) {
    const bool json_out = structured(opt);
    const int cap = opt.allow_large ? 16 : 12;
    if (n > cap)
        throw std::invalid_argument(
            opt.allow_large ? "apartment-stats supports n up to 16"
                            : "apartment-stats supports n up to 12 (up to 16 with --allow-large)");
    const ApartmentShape shape(n, k);

    struct MeetRow {
        int m;
        long predicted;
        long verified;
    };
    std::vector<MeetRow> meets;
    for (int m = std::max(0, 2 * k - n); m <= k; ++m) {
        const auto [x, y] = representative_pair(shape, m);
        meets.push_back({m, predicted_count(n, k, m), count_complementary_containing(shape, x, y)});
    }

    const SubsetSystemStats mi = subset_system_stats(shape, maximal_inexact);
    const SubsetSystemStats comp = subset_system_stats(shape, complementary);

    if (json_out) {
        ordered_json meet_rows = ordered_json::array();
        for (const MeetRow& r : meets)
            meet_rows.push_back({{"m", r.m}, {"predicted", r.predicted}, {"verified", r.verified}});
        emit(out, {{"schema", "apartment-stats/1"},
                   {"n", n},
                   {"k", k},
                   {"members", shape.member_count()},
                   {"index_pairs", binomial(n, 2)},
                   {"meet_counts", meet_rows},
                   {"maximal_inexact", subset_system_json(mi)},
                   {"complementary", subset_system_json(comp)}});
        return 0;
    }

    out << "apartment stats n=" << n << " k=" << k << "\n";
    out << "members: " << shape.member_count() << "\n";
    out << "index pairs: " << binomial(n, 2) << "\n";
    out << "meet-size counts (predicted / brute-forced on a representative pair):\n";
    for (const MeetRow& r : meets)
        out << "  m=" << r.m << ": " << r.predicted << " / " << r.verified << "\n";
    print_subset_system(out, "maximal inexact subsets", mi);
    print_subset_system(out, "complementary subsets", comp);
    return 0;
}

int run_degeneracy_scan(int k_max, int n_max, const CmdOptions& opt, std::ostream& out) {
    const bool json_out = structured(opt);
    const int k_cap = opt.allow_large ? 8 : 6;
    const int n_cap = opt.allow_large ? 30 : 24;
    if (k_max > k_cap || n_max > n_cap)
        throw std::invalid_argument(
            opt.allow_large
                ? "degeneracy-scan supports k_max up to 8 and n_max up to 30"
                : "degeneracy-scan supports k_max up to 6 and n_max up to 24 without --allow-large");
    const std::vector<CollisionRow> rows = degeneracy_scan(k_max, n_max);

    if (json_out) {
        ordered_json json_rows = ordered_json::array();
        for (const CollisionRow& r : rows)
            json_rows.push_back({{"n", r.n},
                                 {"k", r.k},
                                 {"m_low", r.m_low},
                                 {"m_high", r.m_high},
                                 {"count", r.shared_count},
                                 {"band", r.band()}});
        emit(out, {{"schema", "degeneracy-scan/1"},
                   {"k_max", k_max},
                   {"n_max", n_max},
                   {"rows", json_rows},
                   {"total", rows.size()}});
        return 0;
    }

    out << "degeneracy scan k_max=" << k_max << " n_max=" << n_max << "\n";
    for (const CollisionRow& r : rows)
        out << "n=" << r.n << " k=" << r.k << ": m=" << r.m_low << " and m=" << r.m_high
            << " share count " << r.shared_count << " (band " << r.band() << ")\n";
    out << "total: " << rows.size() << " collisions\n";
    return 0;
}

namespace {

ordered_json preservation_json(const PreservationReport& report) {
    ordered_json violations = ordered_json::array();
    for (const PreservationViolation& v : report.violations)
        violations.push_back({{"first", v.first},
                              {"second", v.second},
                              {"sources", v.holds_for_sources},
                              {"images", v.holds_for_images}});
    return {{"pairs_checked", report.pairs_checked},
            {"passed", report.passed()},
            {"violations", violations}};
}

void print_preservation(std::ostream& out, const char* label, const PreservationReport& report) {
    out << label << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.pairs_checked
        << " pairs)\n";
    for (const PreservationViolation& v : report.violations)
        out << "  pair " << v.first << "/" << v.second << ": relation "
            << (v.holds_for_sources ? "holds" : "fails") << " on sources, "
            << (v.holds_for_images ? "holds" : "fails") << " on images\n";
}

ordered_json stage_json(const StageResult& s) {
    return {{"ran", s.ran}, {"passed", s.passed}, {"detail", s.detail}};
}

void print_stage(std::ostream& out, const char* label, const StageResult& s) {
    out << "  " << label << ": " << (s.passed ? "PASS" : (s.ran ? "FAIL" : "SKIPPED")) << " — "
        << s.detail << "\n";
}

} // namespace

int run_check_map(std::istream& fixture_file, const CmdOptions& opt, std::ostream& out) {
    const bool json_out = structured(opt);
    const FixtureFileData data = parse_fixture_file(fixture_file);
    const MapFixture& fixture = data.fixture;
    const int n = data.ambient;
    const int k = fixture.k();

    const PreservationReport compat = check_compatibility_preserving(fixture);
    const PreservationReport orth = check_orthogonality_preserving(fixture);

    // The staged pipeline applies when the fixture covers every member of
    // the standard apartment of (n, k).
    bool pipeline_ran = false;
    PipelineReport pipeline;
    long shared_members = 0;
    if (n <= 30 && fixture.pairs().size() == static_cast<std::size_t>(binomial(n, k))) {
        const GeometricApartment apartment = GeometricApartment::standard(n, k);
        bool total = true;
        std::vector<Subspace> members = apartment.members();
        for (const Subspace& member : members)
            if (fixture.image_of(member) == nullptr) {
                total = false;
                break;
            }
        if (total) {
            pipeline = pipeline_check(fixture, apartment);
            pipeline_ran = true;
            std::set<Subspace> images;
            for (const auto& [source, image] : fixture.pairs()) images.insert(image);
            for (const Subspace& member : members)
                if (images.count(member) != 0) ++shared_members;
        }
    }

    const bool all_passed =
        compat.passed() && orth.passed() && (!pipeline_ran || pipeline.all_passed());

    if (json_out) {
        ordered_json pipeline_doc;
        if (pipeline_ran) {
            pipeline_doc = {
                {"ran", true},
                {"stages",
                 {{"apartment_image", stage_json(pipeline.apartment_image)},
                  {"maximal_inexact_images", stage_json(pipeline.maximal_inexact_images)},
                  {"complementary_images", stage_json(pipeline.complementary_images)},
                  {"pair_counts", stage_json(pipeline.pair_counts)},
                  {"orthogonality", stage_json(pipeline.orthogonality)}}},
                {"shared_members", shared_members}};
        } else {
            pipeline_doc = {{"ran", false}};
        }
        emit(out, {{"schema", "check-map/1"},
                   {"rank", k},
                   {"ambient", n},
                   {"pairs", fixture.pairs().size()},
                   {"closed_under", fixture.closed_under()},
                   {"compatibility", preservation_json(compat)},
                   {"orthogonality", preservation_json(orth)},
                   {"pipeline", pipeline_doc},
                   {"verdict", all_passed ? "pass" : "fail"}});
        return all_passed ? 0 : 1;
    }

    out << "fixture: rank " << k << ", ambient " << n << ", " << fixture.pairs().size()
        << " pairs (" << fixture.closed_under() << ")\n";
    print_preservation(out, "compatibility preservation", compat);
    print_preservation(out, "orthogonality preservation", orth);
    if (pipeline_ran) {
        out << "pipeline over the standard apartment:\n";
        print_stage(out, "apartment image", pipeline.apartment_image);
        print_stage(out, "maximal inexact images", pipeline.maximal_inexact_images);
        print_stage(out, "complementary images", pipeline.complementary_images);
        print_stage(out, "pair counts", pipeline.pair_counts);
        print_stage(out, "orthogonality", pipeline.orthogonality);
        out << "  members shared between source and image families: " << shared_members << "\n";
    } else {
        out << "pipeline: not applicable (fixture does not cover the standard apartment)\n";
    }
    out << "verdict: " << (all_passed ? "PASS" : "FAIL") << "\n";
    return all_passed ? 0 : 1;
}

namespace {

ordered_json basis_json(const Subspace& space) {
    ordered_json rows = ordered_json::array();
    for (const CVector& row : space.basis()) {
        ordered_json entries = ordered_json::array();
        for (const GaussianRational& e : row) entries.push_back(format_entry(e));
        rows.push_back(entries);
    }
    return rows;
}

std::string basis_text(const CVector& row) {
    std::string out = "(";
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (c != 0) out += ",";
        out += format_entry(row[c]);
    }
    return out + ")";
}

} // namespace

int run_verify_family(std::istream& subspace_file, int k, const CmdOptions& opt,
                      std::ostream& out) {
    const bool json_out = structured(opt);
    const SubspaceFileData data = parse_subspace_file(subspace_file);
    if (data.blocks.empty()) throw std::invalid_argument("file holds no subspace blocks");

    std::vector<std::string> names;
    std::vector<Subspace> family;
    for (const auto& [name, space] : data.blocks) {
        names.push_back(name);
        family.push_back(space);
    }
    const FamilyAnalysis analysis = analyze_family(family, k);
    const CompatibleFamilyReport& report = analysis.report;

    if (json_out) {
        ordered_json doc = {{"schema", "verify-family/1"},
                            {"rank", k},
                            {"ambient", data.ambient},
                            {"members", names}};
        if (analysis.incompatible_pair) {
            doc["incompatible_pair"] = {names[analysis.incompatible_pair->first],
                                        names[analysis.incompatible_pair->second]};
            doc["report"] = nullptr;
        } else {
            ordered_json parts = ordered_json::array();
            for (const Subspace& part : report.minimal_parts) parts.push_back(basis_json(part));
            doc["incompatible_pair"] = nullptr;
            doc["report"] = {{"minimal_parts", parts},
                             {"all_lines", report.all_lines},
                             {"mutually_orthogonal", report.mutually_orthogonal},
                             {"spans_ambient", report.spans_ambient},
                             {"members_decompose", report.members_decompose},
                             {"cardinality_complete", report.cardinality_complete},
                             {"is_maximal", report.is_maximal}};
        }
        emit(out, doc);
        return 0;
    }

    out << "family of " << family.size() << " subspaces, rank " << k << ", ambient "
        << data.ambient << "\n";
    if (analysis.incompatible_pair) {
        out << "incompatible pair: " << names[analysis.incompatible_pair->first] << " and "
            << names[analysis.incompatible_pair->second] << "\n";
        return 0;
    }
    out << "minimal parts: " << report.minimal_parts.size() << "\n";
    for (std::size_t p = 0; p < report.minimal_parts.size(); ++p)
        for (const CVector& row : report.minimal_parts[p].basis())
            out << "  part " << p << ": " << basis_text(row) << "\n";
    const auto yesno = [](bool b) { return b ? "yes" : "no"; };
    out << "all lines: " << yesno(report.all_lines) << "\n";
    out << "mutually orthogonal: " << yesno(report.mutually_orthogonal) << "\n";
    out << "spans ambient: " << yesno(report.spans_ambient) << "\n";
    out << "members decompose: " << yesno(report.members_decompose) << "\n";
    out << "cardinality complete: " << yesno(report.cardinality_complete) << " ("
        << family.size() << " of " << binomial(data.ambient, k) << " members)\n";
    out << "maximal: " << yesno(report.is_maximal) << "\n";
    return 0;
}

} // namespace orthapt
