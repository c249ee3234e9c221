#include "orthapt/kernels.hpp"

namespace orthapt {
namespace detail {

// The parallel variants partition rows across OpenMP workers. Rows are
// independent and write disjoint slices, so no synchronization is needed;
// without OpenMP the pragmas degrade to the plain loop.

std::vector<std::uint8_t> compatibility_table_parallel(const std::vector<Subspace>& family) {
    std::vector<std::uint8_t> table(family.size() * family.size());
    const std::int64_t f = static_cast<std::int64_t>(family.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t a = 0; a < f; ++a)
        compatibility_row(family, static_cast<std::size_t>(a), table);
    return table;
}

std::vector<std::uint8_t> orthogonality_table_parallel(const std::vector<Subspace>& family) {
    std::vector<std::uint8_t> table(family.size() * family.size());
    const std::int64_t f = static_cast<std::int64_t>(family.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t a = 0; a < f; ++a)
        orthogonality_row(family, static_cast<std::size_t>(a), table);
    return table;
}

std::vector<long> complementary_pair_counts_parallel(const ApartmentShape& shape,
                                                     const std::vector<IndexMember>& members) {
    std::vector<long> table(members.size() * members.size());
    const std::int64_t f = static_cast<std::int64_t>(members.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < f; ++a)
        complementary_counts_row(shape, members, static_cast<std::size_t>(a), table);
    return table;
}

std::vector<int> pairwise_intersection_sizes_parallel(
    const std::vector<std::vector<IndexMember>>& sets) {
    std::vector<int> table(sets.size() * sets.size());
    const std::int64_t f = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t a = 0; a < f; ++a)
        intersection_sizes_row(sets, static_cast<std::size_t>(a), table);
    return table;
}

} // namespace detail
} // namespace orthapt
