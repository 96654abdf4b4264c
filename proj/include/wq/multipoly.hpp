#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wq/scalar.hpp"

namespace wq {

/// Dense fixed-length exponent vector; entries beyond the arity stay zero so
/// bytewise comparison is the canonical lexicographic term order.
struct ExpVec {
    static constexpr int kMaxVars = 16;
    std::array<std::uint8_t, kMaxVars> e{};

    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        return std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0;
    }
    friend bool operator<(const ExpVec& a, const ExpVec& b) {
        return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
    }

    int total_degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
};

/// Sparse multivariate polynomial over GaussianRational in x_1..x_arity.
/// Arity 0 values are constants and promote against any arity; two polynomials
/// of positive arity must agree on arity to combine. No zero terms are stored,
/// so equality is term-map equality.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, GaussianRational>;

    MultiPoly() : arity_(0) {}
    MultiPoly(long c) : arity_(0) { set_constant_term(GaussianRational(c)); }
    MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}

    static MultiPoly constant(int arity, GaussianRational c);
    static MultiPoly variable(int arity, int index);  // index is 1-based
    static MultiPoly zero(int arity) { return constant(arity, GaussianRational(0)); }
    static MultiPoly one(int arity) { return constant(arity, GaussianRational(1)); }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{}); }
    GaussianRational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly& scale(const GaussianRational& c);
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly p) { return p.scale(c); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact quotient *this / d, or nullopt when d does not divide exactly.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    GaussianRational eval(std::span<const GaussianRational> point) const;

    /// Substitutes x_index (1-based) by the given polynomial of the same arity.
    MultiPoly substitute(int index, const MultiPoly& image) const;

    /// Reinterprets in a larger variable set (new variables unused).
    MultiPoly extend_arity(int new_arity) const;

    /// x_i -> x_{perm[i-1]} with perm a 1-based permutation of 1..arity.
    MultiPoly permute_vars(std::span<const int> perm) const;

    MultiPoly derivative(int index) const;  // d/dx_index, 1-based

    /// Sum of the terms of maximal total degree.
    MultiPoly leading_form() const;

    bool depends_on(int index) const;  // 1-based

    void add_term(const ExpVec& exp, const GaussianRational& coeff);

    std::string str() const;  // canonical rendering, e.g. "x1^2*x2 - 3*x3"

private:
    void set_constant_term(GaussianRational c);
    static int combined_arity(const MultiPoly& a, const MultiPoly& b);

    int arity_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace wq

namespace Eigen {

template <typename T>
struct NumTraits;

template <>
struct NumTraits<wq::MultiPoly> {
    using Real = wq::MultiPoly;
    using NonInteger = wq::MultiPoly;
    using Nested = wq::MultiPoly;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 600,
        MulCost = 4000,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
