#include "orthapt/kernels.hpp"

#include "orthapt/logic.hpp"

#include <algorithm>

namespace orthapt {

namespace detail {

// Each kernel fills one row at a time so the serial and parallel variants
// share the row routines exactly; parallelism only changes who runs a row.

void compatibility_row(const std::vector<Subspace>& family, std::size_t a,
                       std::vector<std::uint8_t>& table) {
    const std::size_t f = family.size();
    for (std::size_t b = 0; b < f; ++b)
        table[a * f + b] = is_compatible(family[a], family[b]) ? 1 : 0;
}

void orthogonality_row(const std::vector<Subspace>& family, std::size_t a,
                       std::vector<std::uint8_t>& table) {
    const std::size_t f = family.size();
    for (std::size_t b = 0; b < f; ++b)
        table[a * f + b] = is_orthogonal(family[a], family[b]) ? 1 : 0;
}

void complementary_counts_row(const ApartmentShape& shape,
                              const std::vector<IndexMember>& members, std::size_t a,
                              std::vector<long>& table) {
    const std::size_t f = members.size();
    for (std::size_t b = 0; b < f; ++b)
        table[a * f + b] = count_complementary_containing(shape, members[a], members[b]);
}

void intersection_sizes_row(const std::vector<std::vector<IndexMember>>& sets, std::size_t a,
                            std::vector<int>& table) {
    const std::size_t f = sets.size();
    for (std::size_t b = 0; b < f; ++b) {
        const auto& lhs = sets[a];
        const auto& rhs = sets[b];
        int size = 0;
        std::size_t x = 0, y = 0;
        while (x < lhs.size() && y < rhs.size()) {
            if (lhs[x] < rhs[y]) ++x;
            else if (rhs[y] < lhs[x]) ++y;
            else { ++size; ++x; ++y; }
        }
        table[a * f + b] = size;
    }
}

std::vector<std::uint8_t> compatibility_table_serial(const std::vector<Subspace>& family) {
    std::vector<std::uint8_t> table(family.size() * family.size());
    for (std::size_t a = 0; a < family.size(); ++a) compatibility_row(family, a, table);
    return table;
}

std::vector<std::uint8_t> orthogonality_table_serial(const std::vector<Subspace>& family) {
    std::vector<std::uint8_t> table(family.size() * family.size());
    for (std::size_t a = 0; a < family.size(); ++a) orthogonality_row(family, a, table);
    return table;
}

std::vector<long> complementary_pair_counts_serial(const ApartmentShape& shape,
                                                   const std::vector<IndexMember>& members) {
    std::vector<long> table(members.size() * members.size());
    for (std::size_t a = 0; a < members.size(); ++a)
        complementary_counts_row(shape, members, a, table);
    return table;
}

std::vector<int> pairwise_intersection_sizes_serial(
    const std::vector<std::vector<IndexMember>>& sets) {
    std::vector<int> table(sets.size() * sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) intersection_sizes_row(sets, a, table);
    return table;
}

} // namespace detail

std::vector<std::uint8_t> compatibility_table(const std::vector<Subspace>& family, Exec exec) {
    return exec == Exec::Serial ? detail::compatibility_table_serial(family)
                                : detail::compatibility_table_parallel(family);
}

std::vector<std::uint8_t> orthogonality_table(const std::vector<Subspace>& family, Exec exec) {
    return exec == Exec::Serial ? detail::orthogonality_table_serial(family)
                                : detail::orthogonality_table_parallel(family);
}

std::vector<long> complementary_pair_counts(const ApartmentShape& shape,
                                            const std::vector<IndexMember>& members, Exec exec) {
    return exec == Exec::Serial ? detail::complementary_pair_counts_serial(shape, members)
                                : detail::complementary_pair_counts_parallel(shape, members);
}

std::vector<int> pairwise_intersection_sizes(const std::vector<std::vector<IndexMember>>& sets,
                                             Exec exec) {
    return exec == Exec::Serial ? detail::pairwise_intersection_sizes_serial(sets)
                                : detail::pairwise_intersection_sizes_parallel(sets);
}

} // namespace orthapt
