#include "orthapt/apartments.hpp"

#include <algorithm>
#include <bit>

namespace orthapt {

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * static_cast<unsigned long long>(n - k + t) / t;
    return r;
}

int member_size(IndexMember m) { return std::popcount(m); }

std::vector<int> member_indices(IndexMember m) {
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

IndexMember make_member(const std::vector<int>& indices) {
    IndexMember m = 0;
    for (int i : indices) {
        if (i < 0 || i >= 30) throw std::invalid_argument("make_member: index out of range");
        const IndexMember bit = std::uint32_t{1} << i;
        if (m & bit) throw std::invalid_argument("make_member: repeated index");
        m |= bit;
    }
    return m;
}

std::string member_to_string(IndexMember m) {
    std::string out = "{";
    bool first = true;
    for (int i : member_indices(m)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

ApartmentShape::ApartmentShape(int ambient, int rank) : n(ambient), k(rank) {
    if (n < 2 || n > 30) throw std::invalid_argument("ApartmentShape: ambient dimension must be in [2, 30]");
    if (k < 1 || k > n - 1) throw std::invalid_argument("ApartmentShape: rank must be in [1, n-1]");
}

PairDescriptor::PairDescriptor(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b || a < 0 || b < 0) throw std::invalid_argument("PairDescriptor: indices must be distinct and nonnegative");
}

std::vector<PairDescriptor> all_pairs(const ApartmentShape& shape) {
    std::vector<PairDescriptor> out;
    out.reserve(static_cast<std::size_t>(binomial(shape.n, 2)));
    for (int i = 0; i < shape.n; ++i)
        for (int j = i + 1; j < shape.n; ++j) out.push_back(PairDescriptor(i, j));
    return out;
}

std::vector<IndexMember> all_members(const ApartmentShape& shape) {
    std::vector<IndexMember> out;
    out.reserve(static_cast<std::size_t>(shape.member_count()));
    const std::uint32_t limit = std::uint32_t{1} << shape.n;
    // Gosper's hack walks the k-subsets in increasing mask order.
    std::uint32_t v = (std::uint32_t{1} << shape.k) - 1;
    while (v < limit) {
        out.push_back(v);
        std::uint32_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

static void check_index_mask(const ApartmentShape& shape, std::uint32_t mask, const char* what) {
    if ((mask & ~shape.full_mask()) != 0) throw std::invalid_argument(what);
}

std::vector<IndexMember> select(const ApartmentShape& shape, std::uint32_t with_mask,
                                std::uint32_t without_mask) {
    check_index_mask(shape, with_mask, "select: index out of range");
    check_index_mask(shape, without_mask, "select: index out of range");
    if ((with_mask & without_mask) != 0)
        throw std::invalid_argument("select: constraint sets overlap");
    std::vector<IndexMember> out;
    for (IndexMember m : all_members(shape))
        if ((m & with_mask) == with_mask && (m & without_mask) == 0) out.push_back(m);
    return out;
}

std::uint32_t support_set(const std::vector<IndexMember>& x, const ApartmentShape& shape, int i) {
    if (i < 0 || i >= shape.n) throw std::invalid_argument("support_set: index out of range");
    const std::uint32_t full = shape.full_mask();
    std::uint32_t acc = full;
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (IndexMember m : x) acc &= (m & bit) ? m : (full & ~m);
    return acc;
}

std::optional<PairDescriptor> is_inexact(const std::vector<IndexMember>& x,
                                         const ApartmentShape& shape) {
    for (int i = 0; i < shape.n; ++i) {
        std::uint32_t s = support_set(x, shape, i);
        if (std::popcount(s) < 2) continue;
        std::uint32_t others = s & ~(std::uint32_t{1} << i);
        return PairDescriptor(i, std::countr_zero(others));
    }
    return std::nullopt;
}

std::vector<IndexMember> maximal_inexact(const ApartmentShape& shape, const PairDescriptor& p) {
    check_index_mask(shape, p.mask(), "maximal_inexact: index out of range");
    std::vector<IndexMember> out;
    const std::uint32_t pm = p.mask();
    for (IndexMember m : all_members(shape)) {
        const std::uint32_t hit = m & pm;
        if (hit == pm || hit == 0) out.push_back(m);
    }
    return out;
}

std::vector<IndexMember> complementary(const ApartmentShape& shape, const PairDescriptor& p) {
    check_index_mask(shape, p.mask(), "complementary: index out of range");
    std::vector<IndexMember> out;
    const std::uint32_t pm = p.mask();
    for (IndexMember m : all_members(shape))
        if (std::popcount(m & pm) == 1) out.push_back(m);
    return out;
}

static void check_membership(const ApartmentShape& shape, IndexMember m, const char* what) {
    if ((m & ~shape.full_mask()) != 0 || std::popcount(m) != shape.k)
        throw std::invalid_argument(what);
}

long count_complementary_containing(const ApartmentShape& shape, IndexMember x, IndexMember y) {
    check_membership(shape, x, "count_complementary_containing: first argument is not a member");
    check_membership(shape, y, "count_complementary_containing: second argument is not a member");
    long count = 0;
    for (int i = 0; i < shape.n; ++i)
        for (int j = i + 1; j < shape.n; ++j) {
            const std::uint32_t pm = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
            if (std::popcount(x & pm) == 1 && std::popcount(y & pm) == 1) ++count;
        }
    return count;
}

long predicted_count(int n, int k, int m) {
    ApartmentShape shape(n, k); // validates n, k
    if (m < std::max(0, 2 * k - n) || m > k)
        throw std::invalid_argument("predicted_count: infeasible meet size");
    const long km = k - m;
    return km * km + static_cast<long>(m) * (n - 2 * k + m);
}

std::vector<int> infer_meet_size(int n, int k, long count) {
    if (count < 0) throw std::invalid_argument("infer_meet_size: count must be nonnegative");
    std::vector<int> out;
    for (int m = std::max(0, 2 * k - n); m <= k; ++m)
        if (predicted_count(n, k, m) == count) out.push_back(m);
    return out;
}

std::pair<IndexMember, IndexMember> representative_pair(const ApartmentShape& shape, int m) {
    if (m < std::max(0, 2 * shape.k - shape.n) || m > shape.k)
        throw std::invalid_argument("representative_pair: infeasible meet size");
    const IndexMember x = (std::uint32_t{1} << shape.k) - 1;
    const IndexMember y = ((std::uint32_t{1} << m) - 1) |
                          (((std::uint32_t{1} << (shape.k - m)) - 1) << shape.k);
    return {x, y};
}

const char* CollisionRow::band() const {
    if (n == 2 * k - 2) return "2k-2";
    if (n == 2 * k + 2) return "2k+2";
    return "other";
}

std::vector<CollisionRow> degeneracy_scan(int k_max, int n_max) {
    if (k_max < 2) throw std::invalid_argument("degeneracy_scan: k_max must be at least 2");
    if (n_max < 2 * k_max) throw std::invalid_argument("degeneracy_scan: n_max must be at least 2*k_max");
    if (n_max > 30) throw std::invalid_argument("degeneracy_scan: n_max must be at most 30");

    std::vector<CollisionRow> rows;
    for (int k = 2; k <= k_max; ++k) {
        for (int n = k + 2; n <= n_max; ++n) {
            const ApartmentShape shape(n, k);
            const int m_lo = std::max(0, 2 * k - n);
            // One brute-forced count per meet size, on the canonical pair.
            std::vector<long> counts;
            for (int m = m_lo; m <= k - 1; ++m) {
                const auto [x, y] = representative_pair(shape, m);
                counts.push_back(count_complementary_containing(shape, x, y));
            }
            for (int a = 0; a < static_cast<int>(counts.size()); ++a)
                for (int b = a + 1; b < static_cast<int>(counts.size()); ++b)
                    if (counts[a] == counts[b])
                        rows.push_back({n, k, m_lo + a, m_lo + b, counts[a]});
        }
    }
    return rows;
}

GeometricApartment::GeometricApartment(std::vector<CVector> base, int rank)
    : base_(std::move(base)), shape_(static_cast<int>(base_.size()), rank) {
    const int n = shape_.n;
    for (const auto& v : base_) {
        if (static_cast<int>(v.size()) != n)
            throw dimension_error("GeometricApartment: base vector length differs from base size");
        if (is_zero_vector(v)) throw std::invalid_argument("GeometricApartment: base vector is zero");
    }
    for (std::size_t a = 0; a < base_.size(); ++a)
        for (std::size_t b = a + 1; b < base_.size(); ++b)
            if (!hermitian_inner(base_[a], base_[b]).is_zero())
                throw std::invalid_argument("GeometricApartment: base vectors are not orthogonal");
}

GeometricApartment GeometricApartment::standard(int n, int k) {
    std::vector<CVector> base;
    base.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base.push_back(unit_vector(n, i));
    return GeometricApartment(std::move(base), k);
}

Subspace GeometricApartment::member(IndexMember m) const {
    check_membership(shape_, m, "GeometricApartment::member: mask is not a member of this shape");
    std::vector<CVector> vectors;
    vectors.reserve(static_cast<std::size_t>(shape_.k));
    for (int i : member_indices(m)) vectors.push_back(base_[static_cast<std::size_t>(i)]);
    return Subspace::span(shape_.n, vectors);
}

std::vector<Subspace> GeometricApartment::members() const {
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(shape_.member_count()));
    for (IndexMember m : all_members(shape_)) out.push_back(member(m));
    return out;
}

std::optional<IndexMember> coordinatize(const GeometricApartment& apartment, const Subspace& x) {
    if (x.ambient() != apartment.n()) throw dimension_error("coordinatize: ambient mismatch");
    if (x.dim() != apartment.k()) throw dimension_error("coordinatize: dimension differs from rank");
    const int n = apartment.n();
    const int k = apartment.k();
    IndexMember s = 0;
    for (int i = 0; i < n; ++i) {
        if (std::popcount(s) + (n - i) < k) return std::nullopt; // cannot reach k anymore
        if (x.contains(apartment.base()[static_cast<std::size_t>(i)])) s |= std::uint32_t{1} << i;
    }
    if (std::popcount(s) != k) return std::nullopt;
    return s;
}

} // namespace orthapt
