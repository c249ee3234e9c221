#include "orthapt/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace orthapt;
using testutil::cv;
using testutil::cvi;
using testutil::gr;
using testutil::random_subspace;
using testutil::random_vector;
using testutil::sp;

TEST_CASE("vector helpers") {
    CHECK(is_zero_vector(zero_vector(3)));
    CHECK(unit_vector(3, 1) == cv({0, 1, 0}));
    CHECK(conj(cvi({{1, 2}, {0, -1}})) == cvi({{1, -2}, {0, 1}}));
    CHECK(add(cv({1, 2}), cv({3, -2})) == cv({4, 0}));
    CHECK(sub(cv({1, 2}), cv({3, -2})) == cv({-2, 4}));
    CHECK(scaled(cv({1, 2}), gr(0, 1)) == cvi({{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(add(cv({1}), cv({1, 2})), dimension_error);
}

TEST_CASE("hermitian inner product") {
    CHECK(hermitian_inner(unit_vector(2, 0), unit_vector(2, 0)) == gr(1));
    CHECK(hermitian_inner(unit_vector(2, 0), unit_vector(2, 1)) == gr(0));
    // <(1,i),(i,1)> = 1*conj(i) + i*conj(1) = -i + i = 0
    const CVector u = cvi({{1, 0}, {0, 1}});
    const CVector v = cvi({{0, 1}, {1, 0}});
    CHECK(hermitian_inner(u, v) == gr(0));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const CVector a = random_vector(rng, 4);
        const CVector b = random_vector(rng, 4);
        CHECK(hermitian_inner(a, b) == hermitian_inner(b, a).conj());
        const GaussianRational self = hermitian_inner(a, a);
        CHECK(self.is_real());
        CHECK(self.re() >= 0);
        CHECK((self.is_zero() == is_zero_vector(a)));
    }
}

TEST_CASE("primitive_scaled clears denominators and fixes sign") {
    CVector v = {GaussianRational(1, 2, 0, 1), GaussianRational(1, 3, 0, 1)};
    CHECK(primitive_scaled(v) == cv({3, 2}));
    CVector w = {gr(-2), gr(4)};
    CHECK(primitive_scaled(w) == cv({1, -2}));
    // leading entry with zero real part: sign taken from its imaginary part
    CVector z = {gr(0, -3), gr(6)};
    CHECK(primitive_scaled(z) == cvi({{0, 1}, {-2, 0}}));
    CHECK(primitive_scaled(zero_vector(2)) == zero_vector(2));
}

TEST_CASE("span and canonical form") {
    CHECK(Subspace::span(2, {cv({1, 0}), cv({0, 1})}) == Subspace::full(2));
    CHECK(sp(3, {{1, 0, 0}, {2, 0, 0}}).basis() == std::vector<CVector>{cv({1, 0, 0})});

    const Subspace complex_plane = Subspace::span(3, {cvi({{1, 0}, {0, 1}, {0, 0}}), cv({0, 0, 1})});
    CHECK(complex_plane.dim() == 2);
    CHECK(complex_plane.basis()[0] == cvi({{1, 0}, {0, 1}, {0, 0}}));
    CHECK(complex_plane.basis()[1] == cv({0, 0, 1}));

    CHECK(Subspace::zero(4).dim() == 0);
    CHECK(Subspace::zero(4).basis().empty());
    CHECK(Subspace::full(4).dim() == 4);
    CHECK_THROWS_AS(Subspace::span(2, {cv({1, 2, 3})}), dimension_error);
}

TEST_CASE("canonicity: shuffles and rescalings give identical basis rows") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 4;
        std::vector<CVector> rows;
        for (int r = 0; r < 3; ++r) rows.push_back(random_vector(rng, n));
        const Subspace reference = Subspace::span(n, rows);

        std::shuffle(rows.begin(), rows.end(), rng);
        std::vector<CVector> rescaled;
        const GaussianRational scales[] = {gr(2), gr(-1), gr(0, 1), gr(1, 1), gr(-3, 2)};
        std::uniform_int_distribution<std::size_t> pick(0, std::size(scales) - 1);
        for (const CVector& row : rows) rescaled.push_back(scaled(row, scales[pick(rng)]));
        for (int r = 0; r < 2; ++r) rescaled.push_back(add(rescaled[0], rescaled[1]));

        const Subspace again = Subspace::span(n, rescaled);
        CHECK(again == reference);
        CHECK(again.basis() == reference.basis());
    }
}

TEST_CASE("containment") {
    const Subspace plane = sp(3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(plane.contains(cv({2, -3, 0})));
    CHECK_FALSE(plane.contains(cv({0, 0, 1})));
    CHECK(plane.contains(sp(3, {{1, 1, 0}})));
    CHECK_FALSE(plane.contains(Subspace::full(3)));
    CHECK(plane.contains(Subspace::zero(3)));
}

TEST_CASE("intersection examples") {
    const Subspace a = sp(3, {{1, 0, 0}, {0, 1, 0}});
    const Subspace b = sp(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(intersect(a, b) == sp(3, {{0, 1, 0}}));
    CHECK(intersect(a, a) == a);
    const Subspace c = sp(3, {{1, 1, 0}, {0, 0, 1}});
    CHECK(intersect(a, c) == sp(3, {{1, 1, 0}}));
    CHECK_THROWS_AS(intersect(a, Subspace::full(2)), dimension_error);
}

TEST_CASE("sum examples") {
    CHECK(sum(sp(2, {{1, 0}}), sp(2, {{0, 1}})) == Subspace::full(2));
    const Subspace a = sp(3, {{1, 2, 3}});
    CHECK(sum(a, Subspace::zero(3)) == a);
    CHECK(sum(sp(2, {{1, 0}}), sp(2, {{1, 1}})) == Subspace::full(2));
}

TEST_CASE("orthocomplement examples") {
    CHECK(orthocomplement(sp(3, {{1, 0, 0}, {0, 1, 0}})) == sp(3, {{0, 0, 1}}));
    CHECK(orthocomplement(Subspace::zero(3)) == Subspace::full(3));
    CHECK(orthocomplement(Subspace::full(3)) == Subspace::zero(3));

    const CVector line = cvi({{1, 0}, {0, 1}, {0, 0}});
    const Subspace perp = orthocomplement(Subspace::span(3, {line}));
    CHECK(perp.dim() == 2);
    for (const CVector& row : perp.basis()) CHECK(hermitian_inner(row, line) == gr(0));
}

TEST_CASE("orthogonality examples") {
    CHECK(is_orthogonal(sp(2, {{1, 0}}), sp(2, {{0, 1}})));
    CHECK_FALSE(is_orthogonal(sp(2, {{1, 0}}), sp(2, {{1, 1}})));
    const Subspace u = Subspace::span(2, {cvi({{1, 0}, {0, 1}})});
    const Subspace v = Subspace::span(2, {cvi({{0, 1}, {1, 0}})});
    CHECK(is_orthogonal(u, v));
    CHECK(is_orthogonal(Subspace::zero(2), Subspace::full(2)));
}

TEST_CASE("lattice identities on random subspaces") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(trial % 3); // ambient 2..4
        std::uniform_int_distribution<int> rows(0, n);
        const Subspace a = random_subspace(rng, n, rows(rng));
        const Subspace b = random_subspace(rng, n, rows(rng));

        // modular identity, exactly
        CHECK(intersect(a, b).dim() + sum(a, b).dim() == a.dim() + b.dim());
        // double complement
        CHECK(orthocomplement(orthocomplement(a)) == a);
        // complement laws
        CHECK(orthocomplement(sum(a, b)) == intersect(orthocomplement(a), orthocomplement(b)));
        CHECK(orthocomplement(intersect(a, b)) == sum(orthocomplement(a), orthocomplement(b)));
        // complement really is orthogonal and complementary
        CHECK(is_orthogonal(a, orthocomplement(a)));
        CHECK(intersect(a, orthocomplement(a)) == Subspace::zero(n));
        CHECK(a.dim() + orthocomplement(a).dim() == n);
    }
}

TEST_CASE("projector examples") {
    const CMatrix p1 = projector(sp(2, {{1, 0}}));
    CHECK(p1(0, 0) == gr(1));
    CHECK(p1(0, 1) == gr(0));
    CHECK(p1(1, 0) == gr(0));
    CHECK(p1(1, 1) == gr(0));

    CHECK(projector(Subspace::full(3)) == CMatrix::identity(3));
    CHECK(projector(Subspace::zero(2)) == CMatrix(2, 2));

    const CMatrix half = projector(sp(2, {{1, 1}}));
    const GaussianRational h(1, 2, 0, 1);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(half(r, c) == h);
}

TEST_CASE("projector algebra on random subspaces") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + trial % 3;
        std::uniform_int_distribution<int> rows(0, n);
        const Subspace a = random_subspace(rng, n, rows(rng));
        const CMatrix p = projector(a);
        CHECK(p * p == p);
        CHECK(p.adjoint() == p);
        for (const CVector& row : a.basis()) CHECK(mat_vec(p, row) == row);
        const Subspace complement = orthocomplement(a);
        for (const CVector& row : complement.basis())
            CHECK(is_zero_vector(mat_vec(p, row)));
    }
}

TEST_CASE("matrix product and adjoint") {
    CMatrix m(2, 2);
    m(0, 0) = gr(1, 1);
    m(0, 1) = gr(2);
    m(1, 0) = gr(0, -1);
    m(1, 1) = gr(3);
    const CMatrix a = m.adjoint();
    CHECK(a(0, 0) == gr(1, -1));
    CHECK(a(0, 1) == gr(0, 1));
    CHECK(a(1, 0) == gr(2));
    CHECK(a(1, 1) == gr(3));
    CHECK(m * CMatrix::identity(2) == m);
    CHECK(mat_vec(m, cv({1, 0})) == cvi({{1, 1}, {0, -1}}));
}

TEST_CASE("row_reduce returns the rank and drops zero rows") {
    std::vector<CVector> rows = {cv({1, 2, 3}), cv({2, 4, 6}), cv({0, 1, 1})};
    CHECK(row_reduce(rows) == 2);
    CHECK(rows.size() == 2);
    CHECK(rows[0] == cv({1, 0, 1}));
    CHECK(rows[1] == cv({0, 1, 1}));
}

TEST_CASE("subspace ordering is strict and total on distinct spaces") {
    const Subspace a = sp(2, {{1, 0}});
    const Subspace b = sp(2, {{0, 1}});
    CHECK(((a < b) != (b < a)));
    CHECK_FALSE(a < a);
}
