#pragma once

#include "orthapt/apartments.hpp"
#include "orthapt/linalg.hpp"

#include <cstdint>
#include <vector>

namespace orthapt {

/// Execution strategy for the batch kernels. Serial is the reference
/// implementation; Parallel partitions the row space across OpenMP workers
/// and must produce bit-identical results (falls back to serial when built
/// without OpenMP).
enum class Exec { Serial, Parallel };

/// Full symmetric |family|×|family| table of is_compatible, row-major,
/// 1 for compatible.
std::vector<std::uint8_t> compatibility_table(const std::vector<Subspace>& family,
                                              Exec exec = Exec::Parallel);

/// Full symmetric table of is_orthogonal over the family.
std::vector<std::uint8_t> orthogonality_table(const std::vector<Subspace>& family,
                                              Exec exec = Exec::Parallel);

/// Full symmetric |members|×|members| table: entry (a, b) is the number of
/// index pairs whose complementary subset holds both members[a] and
/// members[b].
std::vector<long> complementary_pair_counts(const ApartmentShape& shape,
                                            const std::vector<IndexMember>& members,
                                            Exec exec = Exec::Parallel);

/// Full symmetric |sets|×|sets| table of |sets[a] ∩ sets[b]|; the member
/// lists must be sorted by mask (as produced by the selectors).
std::vector<int> pairwise_intersection_sizes(const std::vector<std::vector<IndexMember>>& sets,
                                             Exec exec = Exec::Parallel);

namespace detail {

// Row routines shared verbatim by both variants; parallelism only changes
// which worker runs a row, so the two tables match bit for bit.
void compatibility_row(const std::vector<Subspace>& family, std::size_t a,
                       std::vector<std::uint8_t>& table);
void orthogonality_row(const std::vector<Subspace>& family, std::size_t a,
                       std::vector<std::uint8_t>& table);
void complementary_counts_row(const ApartmentShape& shape,
                              const std::vector<IndexMember>& members, std::size_t a,
                              std::vector<long>& table);
void intersection_sizes_row(const std::vector<std::vector<IndexMember>>& sets, std::size_t a,
                            std::vector<int>& table);

std::vector<std::uint8_t> compatibility_table_serial(const std::vector<Subspace>& family);
std::vector<std::uint8_t> compatibility_table_parallel(const std::vector<Subspace>& family);
std::vector<std::uint8_t> orthogonality_table_serial(const std::vector<Subspace>& family);
std::vector<std::uint8_t> orthogonality_table_parallel(const std::vector<Subspace>& family);
std::vector<long> complementary_pair_counts_serial(const ApartmentShape& shape,
                                                   const std::vector<IndexMember>& members);
std::vector<long> complementary_pair_counts_parallel(const ApartmentShape& shape,
                                                     const std::vector<IndexMember>& members);
std::vector<int> pairwise_intersection_sizes_serial(
    const std::vector<std::vector<IndexMember>>& sets);
std::vector<int> pairwise_intersection_sizes_parallel(
    const std::vector<std::vector<IndexMember>>& sets);

} // namespace detail

} // namespace orthapt
