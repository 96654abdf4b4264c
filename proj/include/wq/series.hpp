#pragma once

#include <vector>

#include "wq/scalar.hpp"

namespace wq {

/// Rational function N(u)/D(u) where N has only odd negative powers of u
/// (coefficients of u^-1, u^-3, ...) and D only even ones with constant term 1
/// (coefficients of u^0 = 1, u^-2, ...). Every generating function in the
/// artifact has this parity shape.
class RationalSeries {
public:
    RationalSeries() : den_{GaussianRational(1)} {}
    RationalSeries(std::vector<GaussianRational> num, std::vector<GaussianRational> den);

    static RationalSeries zero() { return RationalSeries(); }

    const std::vector<GaussianRational>& num() const { return num_; }
    const std::vector<GaussianRational>& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }

    /// Coefficients of u^-1, u^-3, ..., u^-(2*order+1) of the power-series
    /// expansion (long division; denominator constant term is 1).
    std::vector<GaussianRational> expand(int order) const;

    /// Rational-function equality by cross-multiplication, not coefficient
    /// list equality.
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);
    friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<GaussianRational> num_;  // u^-1, u^-3, ...
    std::vector<GaussianRational> den_;  // 1, u^-2, u^-4, ...
};

/// Even power series f(u) = 1 + f_2 u^-2 + f_4 u^-4 + ... with finitely many
/// nonzero coefficients; stores (f_2, f_4, ...). Used for the one-dimensional
/// Yangian modules Gamma_f and for weight functions theta(u).
class EvenSeries {
public:
    EvenSeries() = default;
    explicit EvenSeries(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static EvenSeries one() { return EvenSeries(); }

    /// Coefficient of u^-2k; at(0) = 1.
    GaussianRational at(int k) const;
    int degree() const { return static_cast<int>(c_.size()); }  // highest k with f_2k != 0
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    friend EvenSeries operator*(const EvenSeries& a, const EvenSeries& b);
    friend bool operator==(const EvenSeries& a, const EvenSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const EvenSeries& a, const EvenSeries& b) { return !(a == b); }
    friend bool operator<(const EvenSeries& a, const EvenSeries& b);

    /// Truncation to k <= K (used when comparing module weights computed at a
    /// finite order).
    EvenSeries truncate(int K) const;

    std::string str() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

}  // namespace wq
