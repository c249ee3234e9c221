#include "orthapt/apartments.hpp"

#include "helpers.hpp"
#include "orthapt/transform.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace orthapt;

namespace {

std::set<IndexMember> as_set(const std::vector<IndexMember>& v) { return {v.begin(), v.end()}; }

IndexMember mem(const std::vector<int>& idx) { return make_member(idx); }

} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(30, 15) == 155117520ULL);
}

TEST_CASE("member helpers round trip") {
    const IndexMember m = mem({0, 2, 5});
    CHECK(member_size(m) == 3);
    CHECK(member_indices(m) == std::vector<int>{0, 2, 5});
    CHECK(member_to_string(m) == "{0,2,5}");
    CHECK(member_to_string(0) == "{}");
    CHECK_THROWS_AS(make_member({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_member({31}), std::invalid_argument);
}

TEST_CASE("shape validation") {
    CHECK(ApartmentShape(6, 2).member_count() == 15);
    CHECK(ApartmentShape(4, 2).full_mask() == 0b1111);
    CHECK_THROWS_AS(ApartmentShape(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ApartmentShape(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(ApartmentShape(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(ApartmentShape(31, 2), std::invalid_argument);
}

TEST_CASE("member enumeration is complete, sorted, and of uniform size") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {7, 4}, {9, 1}}) {
        const ApartmentShape shape(n, k);
        const std::vector<IndexMember> members = all_members(shape);
        CHECK(members.size() == binomial(n, k));
        CHECK(std::is_sorted(members.begin(), members.end()));
        CHECK(std::adjacent_find(members.begin(), members.end()) == members.end());
        for (IndexMember m : members) {
            CHECK(member_size(m) == k);
            CHECK((m & ~shape.full_mask()) == 0);
        }
    }
}

TEST_CASE("pair enumeration") {
    const std::vector<PairDescriptor> pairs = all_pairs(ApartmentShape(4, 2));
    CHECK(pairs.size() == 6);
    CHECK(pairs.front() == PairDescriptor(0, 1));
    CHECK(pairs.back() == PairDescriptor(2, 3));
    CHECK(PairDescriptor(3, 1) == PairDescriptor(1, 3)); // stored unordered
    CHECK(PairDescriptor(1, 3).mask() == 0b1010);
    CHECK_THROWS_AS(PairDescriptor(2, 2), std::invalid_argument);
}

TEST_CASE("select by required and forbidden indices") {
    const ApartmentShape shape(6, 2);
    CHECK(select(shape, 0b110, 0) == std::vector<IndexMember>{mem({1, 2})});
    CHECK(select(shape, 0, 0b110).size() == 6);
    for (IndexMember m : select(shape, 0, 0b110)) CHECK((m & 0b110) == 0);
    CHECK(select(shape, 0, 0) == all_members(shape));
    CHECK(select(shape, 0b111, 0).empty()); // more required indices than the rank
    CHECK_THROWS_AS(select(shape, 0b1, 0b1), std::invalid_argument);
}

TEST_CASE("support sets") {
    const ApartmentShape shape(4, 2);
    const std::vector<IndexMember> x = {mem({0, 1}), mem({2, 3})};
    CHECK(support_set(x, shape, 0) == 0b0011);
    CHECK(support_set(x, shape, 2) == 0b1100);

    CHECK(support_set(all_members(shape), shape, 1) == 0b0010);
    CHECK(support_set({}, shape, 0) == shape.full_mask());
    CHECK_THROWS_AS(support_set(x, shape, 4), std::invalid_argument);
}

TEST_CASE("inexactness witnesses") {
    const ApartmentShape shape(4, 2);
    const std::optional<PairDescriptor> w = is_inexact({mem({0, 1}), mem({2, 3})}, shape);
    REQUIRE(w.has_value());
    CHECK(*w == PairDescriptor(0, 1));

    CHECK_FALSE(is_inexact(all_members(shape), shape).has_value());

    // the canonical maximal inexact subset is itself inexact
    const ApartmentShape shape62(6, 2);
    const std::vector<IndexMember> mi = maximal_inexact(shape62, PairDescriptor(0, 1));
    CHECK(is_inexact(mi, shape62).has_value());
}

TEST_CASE("maximal inexact subsets") {
    const ApartmentShape shape62(6, 2);
    CHECK(maximal_inexact(shape62, PairDescriptor(0, 1)).size() == 7); // 1 + C(4,2)

    const ApartmentShape shape42(4, 2);
    const std::vector<IndexMember> mi = maximal_inexact(shape42, PairDescriptor(0, 1));
    CHECK(as_set(mi) == std::set<IndexMember>{mem({0, 1}), mem({2, 3})});
    // at n = 2k a pair and its complement name the same subset
    CHECK(maximal_inexact(shape42, PairDescriptor(0, 1)) ==
          maximal_inexact(shape42, PairDescriptor(2, 3)));
}

TEST_CASE("adding any member to a maximal inexact subset makes it exact") {
    const ApartmentShape shape(6, 2);
    for (const PairDescriptor& p : all_pairs(shape)) {
        const std::vector<IndexMember> mi = maximal_inexact(shape, p);
        const std::set<IndexMember> have = as_set(mi);
        for (IndexMember extra : all_members(shape)) {
            if (have.count(extra) != 0) continue;
            std::vector<IndexMember> extended = mi;
            extended.push_back(extra);
            CHECK_FALSE(is_inexact(extended, shape).has_value());
        }
    }
}

TEST_CASE("complementary subsets and duality") {
    const ApartmentShape shape62(6, 2);
    CHECK(complementary(shape62, PairDescriptor(0, 1)).size() == 8); // 2 * C(4,1)

    const ApartmentShape shape42(4, 2);
    CHECK(as_set(complementary(shape42, PairDescriptor(0, 1))) ==
          std::set<IndexMember>{mem({0, 2}), mem({0, 3}), mem({1, 2}), mem({1, 3})});

    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        const ApartmentShape shape(n, k);
        const std::set<IndexMember> everything = as_set(all_members(shape));
        for (const PairDescriptor& p : all_pairs(shape)) {
            const std::set<IndexMember> mi = as_set(maximal_inexact(shape, p));
            const std::set<IndexMember> comp = as_set(complementary(shape, p));
            CHECK(mi.size() + comp.size() == everything.size());
            std::set<IndexMember> joined = mi;
            joined.insert(comp.begin(), comp.end());
            CHECK(joined == everything);
        }
    }
}

TEST_CASE("counting complementary subsets through a member pair") {
    const ApartmentShape shape62(6, 2);
    CHECK(count_complementary_containing(shape62, mem({0, 1}), mem({2, 3})) == 4);
    CHECK(count_complementary_containing(shape62, mem({0, 1}), mem({0, 2})) == 4);

    const ApartmentShape shape82(8, 2);
    CHECK(count_complementary_containing(shape82, mem({0, 1}), mem({0, 2})) == 6);

    CHECK_THROWS_AS(count_complementary_containing(shape62, mem({0, 1, 2}), mem({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("predicted counts") {
    CHECK(predicted_count(6, 2, 0) == 4);
    CHECK(predicted_count(6, 2, 1) == 4);
    CHECK(predicted_count(10, 3, 0) == 9);
    CHECK(predicted_count(10, 3, 1) == 9);
    // m = k: every pair meeting the member in exactly one index
    CHECK(predicted_count(6, 2, 2) == 2 * (6 - 2));
    CHECK(predicted_count(7, 3, 3) == 3 * (7 - 3));
    CHECK_THROWS_AS(predicted_count(6, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(predicted_count(4, 3, 1), std::invalid_argument); // below 2k - n
}

TEST_CASE("predicted counts match brute force on representative pairs") {
    for (int k = 1; k <= 4; ++k)
        for (int n = k + 1; n <= 9; ++n) {
            const ApartmentShape shape(n, k);
            for (int m = std::max(0, 2 * k - n); m <= k; ++m) {
                const auto [x, y] = representative_pair(shape, m);
                CHECK(member_size(x) == k);
                CHECK(member_size(y) == k);
                CHECK(member_size(x & y) == m);
                CHECK(count_complementary_containing(shape, x, y) == predicted_count(n, k, m));
            }
        }
}

TEST_CASE("meet-size inference") {
    CHECK(infer_meet_size(8, 2, 6) == std::vector<int>{1});
    CHECK(infer_meet_size(6, 2, 4) == std::vector<int>{0, 1});
    // no meet size attains 5 at (6,2): the counts are 4, 4, 8
    CHECK(infer_meet_size(6, 2, 5).empty());
    // at (7,2) the counts are 4, 5, 10, so 5 pins the meet size uniquely
    CHECK(infer_meet_size(7, 2, 5) == std::vector<int>{1});
    CHECK_THROWS_AS(infer_meet_size(6, 2, -1), std::invalid_argument);
}

TEST_CASE("degeneracy scan finds the known collisions") {
    const std::vector<CollisionRow> rows2 = degeneracy_scan(2, 10);
    CHECK(std::find(rows2.begin(), rows2.end(), CollisionRow{6, 2, 0, 1, 4}) != rows2.end());

    const std::vector<CollisionRow> rows3 = degeneracy_scan(3, 10);
    CHECK(std::find(rows3.begin(), rows3.end(), CollisionRow{8, 3, 0, 2, 9}) != rows3.end());
    CHECK(std::find(rows3.begin(), rows3.end(), CollisionRow{10, 3, 0, 1, 9}) != rows3.end());

    // every reported collision is genuine and within the degenerate range
    for (const CollisionRow& r : rows3) {
        CHECK(r.m_low < r.m_high);
        CHECK(r.m_high <= r.k - 1);
        CHECK(predicted_count(r.n, r.k, r.m_low) == r.shared_count);
        CHECK(predicted_count(r.n, r.k, r.m_high) == r.shared_count);
    }

    // deterministic output
    CHECK(degeneracy_scan(3, 10) == rows3);
}

TEST_CASE("collision bands") {
    CHECK(CollisionRow{6, 2, 0, 1, 4}.band() == std::string("2k+2"));
    CHECK(CollisionRow{8, 3, 0, 2, 9}.band() == std::string("2k+2"));
    CHECK(CollisionRow{6, 4, 1, 3, 5}.band() == std::string("2k-2"));
    CHECK(CollisionRow{10, 3, 0, 1, 9}.band() == std::string("other"));
    CHECK(CollisionRow{6, 3, 1, 2, 5}.band() == std::string("other"));
}

TEST_CASE("scan argument validation") {
    CHECK_THROWS_AS(degeneracy_scan(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy_scan(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy_scan(4, 31), std::invalid_argument);
}

TEST_CASE("geometric apartments") {
    const GeometricApartment apartment = GeometricApartment::standard(4, 2);
    CHECK(apartment.n() == 4);
    CHECK(apartment.k() == 2);
    CHECK(apartment.members().size() == 6);
    CHECK(apartment.member(mem({1, 3})) ==
          Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 3)}));
    CHECK_THROWS_AS(apartment.member(mem({0, 1, 2})), std::invalid_argument);

    // base vectors need not be normalized, only orthogonal and nonzero
    const GeometricApartment scaled_apartment({testutil::cv({2, 0}), testutil::cv({0, -3})}, 1);
    CHECK(scaled_apartment.member(mem({0})) == Subspace::span(2, {unit_vector(2, 0)}));

    CHECK_THROWS_AS(GeometricApartment({testutil::cv({1, 1}), testutil::cv({0, 1})}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeometricApartment({testutil::cv({1, 0}), testutil::cv({0, 0})}, 1),
                    std::invalid_argument);
}

TEST_CASE("coordinatize") {
    const GeometricApartment apartment = GeometricApartment::standard(5, 2);
    const Subspace x = Subspace::span(5, {unit_vector(5, 1), unit_vector(5, 3)});
    CHECK(coordinatize(apartment, x) == mem({1, 3}));

    // a base mixing coordinates 0 and 1 no longer recognizes span(e0)
    const ExactUnitary rot = plane_rotation(5, 0, 1, Rational(3, 5), Rational(4, 5));
    const GeometricApartment rotated = image_apartment(rot, apartment);
    const Subspace line01 = Subspace::span(5, {unit_vector(5, 0), unit_vector(5, 1)});
    CHECK(coordinatize(rotated, line01) == mem({0, 1})); // the rotated plane is the same plane
    const Subspace mixed = Subspace::span(5, {unit_vector(5, 0), unit_vector(5, 2)});
    CHECK_FALSE(coordinatize(rotated, mixed).has_value());

    CHECK_THROWS_AS(coordinatize(apartment, Subspace::span(5, {unit_vector(5, 0)})),
                    dimension_error);

    // round trip over every member of a small apartment
    for (IndexMember m : all_members(apartment.shape()))
        CHECK(coordinatize(apartment, apartment.member(m)) == m);
}
