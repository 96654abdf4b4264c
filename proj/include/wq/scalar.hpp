#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace wq {

using Rational = mpq_class;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
/// mpq_class keeps both parts in reduced canonical form, so equality is
/// representation equality.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = z * conj(z), always a rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inv() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    /// Total order used for canonical multiset sorting: (re, im) lexicographic.
    static int cmp(const GaussianRational& a, const GaussianRational& b) {
        int c = ::cmp(a.re_, b.re_);
        if (c != 0) return c;
        return ::cmp(a.im_, b.im_);
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const GaussianRational& a, const GaussianRational& b) { return cmp(a, b) >= 0; }

    /// Exact zero-test surrogate for generic code that compares |x| against a
    /// zero threshold: |x|^2 as a scalar.
    friend GaussianRational abs(const GaussianRational& v) { return GaussianRational(v.norm()); }

    /// Canonical literal: "p/q", "ri", "-i", "p/q+r/si", ... (the CLI scalar grammar).
    std::string str() const;

    /// Parses the scalar literal grammar: RAT | RAT ("+"|"-") RAT "i" | [RAT] "i".
    static GaussianRational parse(const std::string& text);

private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

/// Exact square root in Q(i) when one exists. Returns the root with
/// (re, im) lexicographically maximal among the two, i.e. re > 0, or re = 0
/// and im >= 0.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& v);

/// Exact square root of a non-negative rational, if rational.
std::optional<Rational> exact_sqrt(const Rational& v);

}  // namespace wq

namespace Eigen {

template <typename T>
struct NumTraits;

template <>
struct NumTraits<wq::GaussianRational> {
    using Real = wq::GaussianRational;
    using NonInteger = wq::GaussianRational;
    using Nested = wq::GaussianRational;
    using Literal = long;
    enum {
        IsComplex = 0,  // commutative exact field; we never use Eigen's conjugation paths
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
