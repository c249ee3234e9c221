#pragma once

#include "orthapt/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthapt {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Coordinate tuple over the Gaussian rationals.
using CVector = std::vector<GaussianRational>;

CVector zero_vector(int n);
CVector unit_vector(int n, int i);
CVector conj(const CVector& v);
bool is_zero_vector(const CVector& v);
CVector scaled(const CVector& v, const GaussianRational& c);
CVector add(const CVector& a, const CVector& b);
CVector sub(const CVector& a, const CVector& b);

/// <u,v> = sum_l u_l * conj(v_l); linear in u, conjugate-linear in v.
GaussianRational hermitian_inner(const CVector& u, const CVector& v);

/// Clears denominators, divides by the integer content and fixes the sign
/// of the leading entry. Spans are unchanged; output entries are Gaussian
/// integers with no common factor.
CVector primitive_scaled(const CVector& v);

int compare(const CVector& a, const CVector& b);

/// Dense matrix of Gaussian rationals, row-major.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const GaussianRational& operator()(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    CMatrix adjoint() const;

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

private:
    int rows_;
    int cols_;
    std::vector<GaussianRational> a_;
};

CVector mat_vec(const CMatrix& m, const CVector& v);

/// Reduces rows in place to reduced echelon form (leading entries 1,
/// zero above and below each pivot, rows ordered by pivot column).
/// Zero rows are dropped. Returns the rank.
int row_reduce(std::vector<CVector>& rows);

/// Linear subspace of the ambient n-dimensional space, held as its unique
/// reduced-echelon basis. Two subspaces are equal iff their basis rows are
/// entrywise identical.
class Subspace {
public:
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    /// Canonical span of the given vectors (the empty list spans {0}).
    static Subspace span(int ambient, const std::vector<CVector>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<CVector>& basis() const { return rows_; }

    bool contains(const CVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    Subspace(int ambient, std::vector<CVector> canonical_rows)
        : ambient_(ambient), rows_(std::move(canonical_rows)) {}

    int ambient_;
    std::vector<CVector> rows_;
};

/// Canonical span; all vectors must share one ambient dimension n >= 1.
Subspace reduce_basis(const std::vector<CVector>& vectors);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace orthocomplement(const Subspace& a);
bool is_orthogonal(const Subspace& a, const Subspace& b);
Subspace conj(const Subspace& a);

/// Exact orthogonal projector onto the subspace: P = P^2 = P^*, P v = v on
/// the subspace and P w = 0 on its orthocomplement.
CMatrix projector(const Subspace& a);

} // namespace orthapt
