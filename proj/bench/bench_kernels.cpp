// Times the serial and parallel variants of each bulk kernel on the same
// inputs and reports wall-clock speedup.  Not a correctness test (the unit
// suite pins serial == parallel); run it by hand to judge scaling on the
// machine at hand.

#include "orthapt/apartments.hpp"
#include "orthapt/kernels.hpp"
#include "orthapt/transform.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

using namespace orthapt;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn> double time_call(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return seconds_since(start);
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

// A family of rank-2 subspaces of C^6 in general position: random integer
// spans, deduplicated by canonical form.
std::vector<Subspace> random_family(int n, int k, std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Subspace> family;
    while (family.size() < count) {
        std::vector<CVector> rows;
        for (int r = 0; r < k; ++r) {
            CVector row(n);
            for (int c = 0; c < n; ++c)
                row[c] = GaussianRational(Rational(coeff(rng)), Rational(coeff(rng)));
            rows.push_back(row);
        }
        const Subspace candidate = Subspace::span(n, rows);
        if (candidate.dim() == k) family.push_back(candidate);
    }
    return family;
}

} // namespace

int main() {
    {
        const std::vector<Subspace> family = random_family(6, 2, 160, 20260822);
        std::vector<std::uint8_t> serial_table, parallel_table;
        const double ts =
            time_call([&] { serial_table = compatibility_table(family, Exec::Serial); });
        const double tp =
            time_call([&] { parallel_table = compatibility_table(family, Exec::Parallel); });
        report("compatibility_table", ts, tp);
        if (serial_table != parallel_table) std::puts("  MISMATCH");

        const double os =
            time_call([&] { serial_table = orthogonality_table(family, Exec::Serial); });
        const double op =
            time_call([&] { parallel_table = orthogonality_table(family, Exec::Parallel); });
        report("orthogonality_table", os, op);
        if (serial_table != parallel_table) std::puts("  MISMATCH");
    }

    {
        const ApartmentShape shape(12, 5);
        const std::vector<IndexMember> members = all_members(shape);
        std::vector<long> serial_counts, parallel_counts;
        const double ts = time_call(
            [&] { serial_counts = complementary_pair_counts(shape, members, Exec::Serial); });
        const double tp = time_call(
            [&] { parallel_counts = complementary_pair_counts(shape, members, Exec::Parallel); });
        report("complementary_pair_counts", ts, tp);
        if (serial_counts != parallel_counts) std::puts("  MISMATCH");
    }

    {
        const ApartmentShape shape(10, 4);
        std::vector<std::vector<IndexMember>> sets;
        for (const PairDescriptor& p : all_pairs(shape)) sets.push_back(maximal_inexact(shape, p));
        std::vector<int> serial_sizes, parallel_sizes;
        const double ts =
            time_call([&] { serial_sizes = pairwise_intersection_sizes(sets, Exec::Serial); });
        const double tp =
            time_call([&] { parallel_sizes = pairwise_intersection_sizes(sets, Exec::Parallel); });
        report("pairwise_intersection_sizes", ts, tp);
        if (serial_sizes != parallel_sizes) std::puts("  MISMATCH");
    }

    return 0;
}
