// Shared builders for the unit tests: terse construction of exact scalars,
// vectors, and subspaces from integer data, plus seeded random generators.
#pragma once

#include "orthapt/linalg.hpp"
#include "orthapt/rational.hpp"

#include <random>
#include <vector>

namespace testutil {

using orthapt::CVector;
using orthapt::GaussianRational;
using orthapt::Rational;
using orthapt::Subspace;

inline GaussianRational gr(long re, long im = 0) {
    return GaussianRational(Rational(re), Rational(im));
}

// Real vector from integer entries.
inline CVector cv(const std::vector<long>& entries) {
    CVector v;
    for (long e : entries) v.push_back(GaussianRational(e));
    return v;
}

// Complex vector from (re, im) integer pairs.
inline CVector cvi(const std::vector<std::pair<long, long>>& entries) {
    CVector v;
    for (const auto& [re, im] : entries) v.push_back(gr(re, im));
    return v;
}

// Span of real integer rows.
inline Subspace sp(int ambient, const std::vector<std::vector<long>>& rows) {
    std::vector<CVector> vecs;
    for (const auto& row : rows) vecs.push_back(cv(row));
    return Subspace::span(ambient, vecs);
}

inline CVector random_vector(std::mt19937& rng, int n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    CVector v;
    for (int c = 0; c < n; ++c) v.push_back(gr(coeff(rng), coeff(rng)));
    return v;
}

// Random subspace spanned by `rows` random vectors (dimension may come out
// lower when rows collide; that is intentional coverage).
inline Subspace random_subspace(std::mt19937& rng, int n, int rows) {
    std::vector<CVector> vecs;
    for (int r = 0; r < rows; ++r) vecs.push_back(random_vector(rng, n));
    return Subspace::span(n, vecs);
}

} // namespace testutil
