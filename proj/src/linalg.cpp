#include "orthapt/linalg.hpp"

#include <algorithm>

namespace orthapt {

CVector zero_vector(int n) {
    if (n < 1) throw dimension_error("vector dimension must be positive");
    return CVector(static_cast<size_t>(n));
}

CVector unit_vector(int n, int i) {
    CVector v = zero_vector(n);
    if (i < 0 || i >= n) throw dimension_error("unit_vector: index out of range");
    v[static_cast<size_t>(i)] = GaussianRational(1);
    return v;
}

CVector conj(const CVector& v) {
    CVector w;
    w.reserve(v.size());
    for (const auto& e : v) w.push_back(e.conj());
    return w;
}

bool is_zero_vector(const CVector& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussianRational& e) { return e.is_zero(); });
}

CVector scaled(const CVector& v, const GaussianRational& c) {
    CVector w;
    w.reserve(v.size());
    for (const auto& e : v) w.push_back(e * c);
    return w;
}

static void check_same_dim(const CVector& a, const CVector& b, const char* what) {
    if (a.size() != b.size()) throw dimension_error(what);
}

CVector add(const CVector& a, const CVector& b) {
    check_same_dim(a, b, "add: dimension mismatch");
    CVector w;
    w.reserve(a.size());
    for (size_t l = 0; l < a.size(); ++l) w.push_back(a[l] + b[l]);
    return w;
}

CVector sub(const CVector& a, const CVector& b) {
    check_same_dim(a, b, "sub: dimension mismatch");
    CVector w;
    w.reserve(a.size());
    for (size_t l = 0; l < a.size(); ++l) w.push_back(a[l] - b[l]);
    return w;
}

GaussianRational hermitian_inner(const CVector& u, const CVector& v) {
    check_same_dim(u, v, "hermitian_inner: dimension mismatch");
    GaussianRational acc;
    for (size_t l = 0; l < u.size(); ++l) acc += u[l] * v[l].conj();
    return acc;
}

CVector primitive_scaled(const CVector& v) {
    mpz_class den_lcm = 1;
    for (const auto& e : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.re().get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.im().get_den().get_mpz_t());
    }
    std::vector<mpz_class> res, ims;
    mpz_class content = 0;
    for (const auto& e : v) {
        mpz_class re = e.re().get_num() * (den_lcm / e.re().get_den());
        mpz_class im = e.im().get_num() * (den_lcm / e.im().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), re.get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), im.get_mpz_t());
        res.push_back(re);
        ims.push_back(im);
    }
    if (content == 0) return v; // zero vector
    int sign = 0;
    for (size_t l = 0; l < res.size() && sign == 0; ++l) {
        if (res[l] != 0) sign = sgn(res[l]);
        else if (ims[l] != 0) sign = sgn(ims[l]);
    }
    if (sign < 0) content = -content;
    CVector w;
    w.reserve(v.size());
    for (size_t l = 0; l < res.size(); ++l)
        w.push_back(GaussianRational(Rational(res[l] / content), Rational(ims[l] / content)));
    return w;
}

int compare(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t l = 0; l < a.size(); ++l) {
        int c = compare(a[l], b[l]);
        if (c != 0) return c;
    }
    return 0;
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("matrix product: shape mismatch");
    CMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianRational& arc = a(r, k);
            if (arc.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m(r, c) += arc * b(k, c);
        }
    return m;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
    if (static_cast<size_t>(m.cols()) != v.size())
        throw dimension_error("mat_vec: shape mismatch");
    CVector w(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) w[static_cast<size_t>(r)] += m(r, c) * v[static_cast<size_t>(c)];
    return w;
}

int row_reduce(std::vector<CVector>& rows) {
    if (rows.empty()) return 0;
    const size_t n = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        GaussianRational inv = GaussianRational(1) / rows[rank][col];
        for (size_t c = col; c < n; ++c) rows[rank][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GaussianRational factor = rows[r][col];
            for (size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return static_cast<int>(rank);
}

Subspace Subspace::zero(int ambient) {
    if (ambient < 1) throw dimension_error("ambient dimension must be positive");
    return Subspace(ambient, {});
}

Subspace Subspace::full(int ambient) {
    std::vector<CVector> rows;
    for (int i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
    return Subspace(ambient, std::move(rows));
}

Subspace Subspace::span(int ambient, const std::vector<CVector>& vectors) {
    if (ambient < 1) throw dimension_error("ambient dimension must be positive");
    std::vector<CVector> rows;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw dimension_error("span: vector does not match ambient dimension");
        rows.push_back(v);
    }
    row_reduce(rows);
    return Subspace(ambient, std::move(rows));
}

bool Subspace::contains(const CVector& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw dimension_error("contains: ambient mismatch");
    CVector r = v;
    for (const auto& row : rows_) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (!r[p].is_zero()) {
            GaussianRational factor = r[p];
            for (size_t c = p; c < r.size(); ++c) r[c] -= factor * row[c];
        }
    }
    return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw dimension_error("contains: ambient mismatch");
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    for (size_t r = 0; r < a.rows_.size(); ++r) {
        int c = compare(a.rows_[r], b.rows_[r]);
        if (c != 0) return c < 0;
    }
    return false;
}

Subspace reduce_basis(const std::vector<CVector>& vectors) {
    if (vectors.empty())
        throw dimension_error("reduce_basis: empty input has no ambient dimension");
    int ambient = static_cast<int>(vectors.front().size());
    return Subspace::span(ambient, vectors);
}

static void check_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient() != b.ambient()) throw dimension_error(what);
}

// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry a basis
// of the intersection in their right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "intersect: ambient mismatch");
    const int n = a.ambient();
    std::vector<CVector> block;
    for (const auto& row : a.basis()) {
        CVector r(static_cast<size_t>(2 * n));
        for (int c = 0; c < n; ++c) r[c] = r[n + c] = row[c];
        block.push_back(std::move(r));
    }
    for (const auto& row : b.basis()) {
        CVector r(static_cast<size_t>(2 * n));
        for (int c = 0; c < n; ++c) r[c] = row[c];
        block.push_back(std::move(r));
    }
    row_reduce(block);
    std::vector<CVector> meet;
    for (const auto& row : block) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c) left_zero = row[c].is_zero();
        if (left_zero) {
            CVector r(row.begin() + n, row.end());
            meet.push_back(std::move(r));
        }
    }
    return Subspace::span(n, meet);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "sum: ambient mismatch");
    std::vector<CVector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), rows);
}

Subspace orthocomplement(const Subspace& a) {
    const int n = a.ambient();
    // v is orthogonal to every basis row b iff conj(B) v = 0.
    std::vector<CVector> m;
    for (const auto& row : a.basis()) m.push_back(conj(row));
    row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    std::vector<int> pivot_of_row;
    for (const auto& row : m) {
        int p = 0;
        while (row[static_cast<size_t>(p)].is_zero()) ++p;
        is_pivot[static_cast<size_t>(p)] = true;
        pivot_of_row.push_back(p);
    }
    std::vector<CVector> kernel;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        CVector v = zero_vector(n);
        v[static_cast<size_t>(f)] = GaussianRational(1);
        for (size_t r = 0; r < m.size(); ++r)
            v[static_cast<size_t>(pivot_of_row[r])] = -m[r][static_cast<size_t>(f)];
        kernel.push_back(std::move(v));
    }
    return Subspace::span(n, kernel);
}

bool is_orthogonal(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "is_orthogonal: ambient mismatch");
    for (const auto& u : a.basis())
        for (const auto& v : b.basis())
            if (!hermitian_inner(u, v).is_zero()) return false;
    return true;
}

Subspace conj(const Subspace& a) {
    std::vector<CVector> rows;
    for (const auto& row : a.basis()) rows.push_back(conj(row));
    return Subspace::span(a.ambient(), rows);
}

// Gauss-Jordan inverse; the Gram matrix of independent rows is always
// invertible, so a rank defect here is a logic error.
static CMatrix inverse(const CMatrix& g) {
    const int k = g.rows();
    std::vector<CVector> aug;
    for (int r = 0; r < k; ++r) {
        CVector row(static_cast<size_t>(2 * k));
        for (int c = 0; c < k; ++c) row[static_cast<size_t>(c)] = g(r, c);
        row[static_cast<size_t>(k + r)] = GaussianRational(1);
        aug.push_back(std::move(row));
    }
    int rank = row_reduce(aug);
    if (rank != k) throw std::logic_error("inverse: singular Gram matrix");
    CMatrix inv(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) inv(r, c) = aug[static_cast<size_t>(r)][static_cast<size_t>(k + c)];
    return inv;
}

CMatrix projector(const Subspace& a) {
    const int n = a.ambient();
    const int k = a.dim();
    CMatrix p(n, n);
    if (k == 0) return p;
    const auto& rows = a.basis();
    CMatrix gram(k, k);
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) gram(r, s) = hermitian_inner(rows[static_cast<size_t>(s)], rows[static_cast<size_t>(r)]);
    CMatrix ginv = inverse(gram);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            GaussianRational acc;
            for (int r = 0; r < k; ++r) {
                if (rows[static_cast<size_t>(r)][static_cast<size_t>(x)].is_zero()) continue;
                for (int s = 0; s < k; ++s)
                    acc += rows[static_cast<size_t>(r)][static_cast<size_t>(x)] * ginv(r, s) *
                           rows[static_cast<size_t>(s)][static_cast<size_t>(y)].conj();
            }
            p(x, y) = acc;
        }
    return p;
}

} // namespace orthapt
