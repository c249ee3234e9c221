#include "orthapt/logic.hpp"

#include <set>

namespace orthapt {

bool is_compatible(const Subspace& x, const Subspace& y) {
    if (x.ambient() != y.ambient()) throw dimension_error("is_compatible: ambient mismatch");
    Subspace meet = intersect(x, y);
    if (!(sum(meet, intersect(x, orthocomplement(y))) == x)) return false;
    return sum(meet, intersect(y, orthocomplement(x))) == y;
}

std::vector<Subspace> minimal_intersections(const std::vector<Subspace>& family) {
    if (family.empty()) throw std::invalid_argument("minimal_intersections: empty family");
    const int n = family.front().ambient();
    for (const auto& s : family)
        if (s.ambient() != n) throw dimension_error("minimal_intersections: ambient mismatch");

    // Close the family under pairwise intersection. Every intersection of a
    // subfamily is a chain of pairwise meets, so the closure carries exactly
    // the nonzero subfamily intersections without 2^|family| enumeration.
    std::set<Subspace> closed;
    std::vector<Subspace> queue;
    for (const auto& s : family) {
        if (s.dim() == 0) continue;
        if (closed.insert(s).second) queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Subspace cur = queue[head];
        const std::vector<Subspace> snapshot(closed.begin(), closed.end());
        for (const auto& other : snapshot) {
            Subspace meet = intersect(cur, other);
            if (meet.dim() == 0) continue;
            if (closed.insert(meet).second) queue.push_back(std::move(meet));
        }
    }

    std::vector<Subspace> minimal;
    for (const auto& s : closed) {
        bool has_proper_part = false;
        for (const auto& t : closed) {
            if (t.dim() < s.dim() && s.contains(t)) {
                has_proper_part = true;
                break;
            }
        }
        if (!has_proper_part) minimal.push_back(s);
    }
    return minimal;
}

// C(n,k) without overflow at the mask sizes used here (n <= 30).
static unsigned long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * static_cast<unsigned long long>(n - k + t) / t;
    return r;
}

FamilyAnalysis analyze_family(const std::vector<Subspace>& family, int k) {
    if (family.empty()) throw std::invalid_argument("analyze_family: empty family");
    if (k < 1) throw dimension_error("analyze_family: rank must be positive");
    const int n = family.front().ambient();
    for (const auto& s : family) {
        if (s.ambient() != n) throw dimension_error("analyze_family: ambient mismatch");
        if (s.dim() != k) throw dimension_error("analyze_family: member dimension differs from rank");
    }

    FamilyAnalysis out;
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (!is_compatible(family[a], family[b])) {
                out.incompatible_pair = {a, b};
                return out;
            }

    CompatibleFamilyReport& r = out.report;
    r.minimal_parts = minimal_intersections(family);

    r.all_lines = true;
    for (const auto& p : r.minimal_parts)
        if (p.dim() != 1) r.all_lines = false;

    r.mutually_orthogonal = true;
    for (std::size_t a = 0; a < r.minimal_parts.size(); ++a)
        for (std::size_t b = a + 1; b < r.minimal_parts.size(); ++b)
            if (!is_orthogonal(r.minimal_parts[a], r.minimal_parts[b])) r.mutually_orthogonal = false;

    Subspace total = Subspace::zero(n);
    for (const auto& p : r.minimal_parts) total = sum(total, p);
    r.spans_ambient = total == Subspace::full(n);

    r.members_decompose = true;
    for (const auto& member : family) {
        Subspace rebuilt = Subspace::zero(n);
        for (const auto& p : r.minimal_parts)
            if (member.contains(p)) rebuilt = sum(rebuilt, p);
        if (!(rebuilt == member)) r.members_decompose = false;
    }

    const std::set<Subspace> distinct(family.begin(), family.end());
    r.cardinality_complete =
        r.all_lines && r.spans_ambient && distinct.size() == choose(n, k);

    r.is_maximal = r.all_lines && r.mutually_orthogonal && r.spans_ambient &&
                   r.members_decompose && r.cardinality_complete;
    return out;
}

CompatibleFamilyReport analyze_compatible_family(const std::vector<Subspace>& family, int k) {
    FamilyAnalysis a = analyze_family(family, k);
    if (a.incompatible_pair) throw incompatibility_error(a.incompatible_pair->first, a.incompatible_pair->second);
    return a.report;
}

// Sequential orthogonalization of `rows` against (and into) `accumulated`.
// Division-free output: each new vector is rescaled to primitive integer
// coordinates, so no square roots or normalization are ever needed.
static void orthogonalize_into(const std::vector<CVector>& rows, std::vector<CVector>& accumulated) {
    for (const auto& r : rows) {
        CVector v = r;
        for (const auto& u : accumulated) {
            GaussianRational coeff = hermitian_inner(v, u) / hermitian_inner(u, u);
            if (!coeff.is_zero()) v = sub(v, scaled(u, coeff));
        }
        if (is_zero_vector(v)) continue; // dependent on earlier vectors
        accumulated.push_back(primitive_scaled(v));
    }
}

std::vector<CVector> extend_pair_to_orthogonal_base(const Subspace& x, const Subspace& y) {
    if (x.ambient() != y.ambient())
        throw dimension_error("extend_pair_to_orthogonal_base: ambient mismatch");
    if (x.dim() != y.dim() || x.dim() < 1)
        throw dimension_error("extend_pair_to_orthogonal_base: subspaces must share one positive dimension");
    if (!is_orthogonal(x, y))
        throw std::invalid_argument("extend_pair_to_orthogonal_base: subspaces are not orthogonal");

    std::vector<CVector> base;
    orthogonalize_into(x.basis(), base);
    orthogonalize_into(y.basis(), base); // y is orthogonal to x, so these stay in y
    orthogonalize_into(orthocomplement(sum(x, y)).basis(), base);
    return base;
}

} // namespace orthapt
