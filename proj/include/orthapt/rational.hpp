#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthapt {

using Rational = mpq_class;

/// Complex number with rational real and imaginary parts.
/// Components stay in lowest terms with positive denominators; all
/// arithmetic is exact.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long value) : re_(value), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)) { canonicalize(); }
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {
        canonicalize();
    }
    GaussianRational(long re_num, long re_den, long im_num, long im_den) {
        if (re_den == 0 || im_den == 0)
            throw std::invalid_argument("GaussianRational: zero denominator");
        re_ = Rational(re_num, re_den);
        im_ = Rational(im_num, im_den);
        canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// Squared modulus re^2 + im^2, an exact nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
        Rational n = b.norm();
        GaussianRational num = a * b.conj();
        return GaussianRational(num.re_ / n, num.im_ / n);
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Total order (real part first), used for canonical sorting only.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    Rational re_;
    Rational im_;
};

inline int compare(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re(), b.re());
    if (c != 0) return c;
    return cmp(a.im(), b.im());
}

} // namespace orthapt
