#pragma once

#include "orthapt/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orthapt {

/// C(n,k); exact for the index ranges supported here (n <= 30).
unsigned long long binomial(int n, int k);

/// A k-element subset of the index set {0,…,n−1}, stored as a bitmask.
/// Bit i set means index i is present; masks sort subsets deterministically.
using IndexMember = std::uint32_t;

int member_size(IndexMember m);
std::vector<int> member_indices(IndexMember m);
IndexMember make_member(const std::vector<int>& indices);
/// Renders "{0,2,5}" with indices ascending.
std::string member_to_string(IndexMember m);

/// Dimensions (n, k) of an apartment: the C(n,k) spans of k-element subsets
/// of a fixed orthogonal base of an n-dimensional space.
struct ApartmentShape {
    int n;
    int k;

    /// Requires n >= 2, 1 <= k <= n-1, n <= 30 (masks are 32-bit).
    ApartmentShape(int ambient, int rank);

    std::uint32_t full_mask() const { return (std::uint32_t{1} << n) - 1; }
    unsigned long long member_count() const { return binomial(n, k); }

    friend bool operator==(const ApartmentShape& a, const ApartmentShape& b) {
        return a.n == b.n && a.k == b.k;
    }
};

/// An unordered pair {i, j} of distinct indices, stored with i < j.
struct PairDescriptor {
    int i;
    int j;

    PairDescriptor(int a, int b);

    std::uint32_t mask() const { return (std::uint32_t{1} << i) | (std::uint32_t{1} << j); }

    friend bool operator==(const PairDescriptor& a, const PairDescriptor& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const PairDescriptor& a, const PairDescriptor& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

/// All C(n,2) index pairs of the shape, sorted.
std::vector<PairDescriptor> all_pairs(const ApartmentShape& shape);

/// All members of the shape, sorted by mask.
std::vector<IndexMember> all_members(const ApartmentShape& shape);

/// Members containing every index of `with` and none of `without`
/// (bit masks; they must be disjoint and within range). Sorted by mask.
std::vector<IndexMember> select(const ApartmentShape& shape, std::uint32_t with_mask,
                                std::uint32_t without_mask);

/// The support set S_i of the subset X: indices j such that no member of X
/// separates i from j (every member holds both or neither). Computed as the
/// intersection of all members containing i and all complements of members
/// not containing i; vacuous constraints give the full index set, and i is
/// always present.
std::uint32_t support_set(const std::vector<IndexMember>& x, const ApartmentShape& shape, int i);

/// Witness pair {i, j} proving X extends to a second apartment: the smallest
/// i with |S_i| >= 2 paired with the smallest j != i in S_i. When every
/// support set is a singleton the subset pins its apartment uniquely and
/// the result is absent.
std::optional<PairDescriptor> is_inexact(const std::vector<IndexMember>& x,
                                         const ApartmentShape& shape);

/// Members containing both of {i, j} or neither: the largest subset that
/// stays inside a second apartment obtained by moving the base inside
/// span(e_i, e_j). Sorted by mask.
std::vector<IndexMember> maximal_inexact(const ApartmentShape& shape, const PairDescriptor& p);

/// Members containing exactly one of {i, j}; the complement of
/// maximal_inexact(p) within the member set. Sorted by mask.
std::vector<IndexMember> complementary(const ApartmentShape& shape, const PairDescriptor& p);

/// Number of pairs {i, j} whose complementary subset holds both X and Y,
/// counted by direct enumeration of all C(n,2) pairs.
long count_complementary_containing(const ApartmentShape& shape, IndexMember x, IndexMember y);

/// Closed form for that count as a function of m = |X ∩ Y| alone:
/// (k−m)² + m·(n−2k+m). Requires max(0, 2k−n) <= m <= k.
long predicted_count(int n, int k, int m);

/// All feasible meet sizes m whose predicted_count equals `count`. A
/// singleton inverts the count back to the meet size; a larger set means
/// the count is degenerate at this shape.
std::vector<int> infer_meet_size(int n, int k, long count);

/// A canonical member pair with meet size m: X = {0,…,k−1} and
/// Y = {0,…,m−1} ∪ {k,…,2k−m−1}. Requires max(0, 2k−n) <= m <= k.
std::pair<IndexMember, IndexMember> representative_pair(const ApartmentShape& shape, int m);

/// One confirmed count collision: two distinct meet sizes m_low < m_high of
/// distinct members (both <= k−1) sharing one count at shape (n, k).
struct CollisionRow {
    int n;
    int k;
    int m_low;
    int m_high;
    long shared_count;

    /// Position of n relative to 2k: the diagonals n = 2k±2 collide for
    /// every k (adjacent meet sizes share a count there); anything else is
    /// reported as "other".
    const char* band() const;

    friend bool operator==(const CollisionRow& a, const CollisionRow& b) {
        return a.n == b.n && a.k == b.k && a.m_low == b.m_low && a.m_high == b.m_high &&
               a.shared_count == b.shared_count;
    }
};

/// Brute-force counts (one representative pair per meet size) for every
/// shape with 2 <= k <= k_max and k+2 <= n <= n_max, reporting all pairs of
/// meet sizes that share a count. n starts at k+2 because smaller ambient
/// dimensions leave at most one feasible meet size below k. Deterministic
/// order: k ascending, then n, then the meet sizes.
std::vector<CollisionRow> degeneracy_scan(int k_max, int n_max);

/// An orthogonal base of the ambient space together with a rank k: the
/// generator of the C(n,k) spans of its k-element subsets. Base vectors are
/// nonzero and pairwise orthogonal, with no normalization required.
class GeometricApartment {
public:
    GeometricApartment(std::vector<CVector> base, int rank);

    /// Base {e_0, …, e_{n−1}} of coordinate unit vectors.
    static GeometricApartment standard(int n, int k);

    const ApartmentShape& shape() const { return shape_; }
    int n() const { return shape_.n; }
    int k() const { return shape_.k; }
    const std::vector<CVector>& base() const { return base_; }

    /// Span of the base vectors selected by the mask (|mask| must be k).
    Subspace member(IndexMember m) const;

    /// All members, in mask order (parallel to all_members(shape())).
    std::vector<Subspace> members() const;

private:
    std::vector<CVector> base_;
    ApartmentShape shape_;
};

/// The index set S with X = span{e_s : s in S} when X is a member of the
/// apartment; absent otherwise. X must be k-dimensional.
std::optional<IndexMember> coordinatize(const GeometricApartment& apartment, const Subspace& x);

} // namespace orthapt
