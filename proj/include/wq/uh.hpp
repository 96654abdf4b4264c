#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "wq/multipoly.hpp"

namespace wq {

/// Product of two ordered generator subsets inside the Clifford-like algebra:
/// xi_i xi_j = -xi_j xi_i for i != j and xi_i^2 = x_i (central). The sign is a
/// merge count of inversions; coincident indices leave the subset and
/// contribute a central factor x_i, collected in `squares`.
struct MaskProduct {
    int sign;                 // +1 or -1
    std::uint32_t mask;       // symmetric difference, ascending order
    std::vector<int> squares; // 1-based indices i with xi_i^2 -> x_i
};
MaskProduct mask_mul(std::uint32_t a, std::uint32_t b);

/// Element of U(h) for Q(n): finite map from generator subsets (bitmask,
/// ascending order) to polynomial coefficients in the central x_1..x_n.
class UhElement {
public:
    using TermMap = std::map<std::uint32_t, MultiPoly>;

    UhElement() : arity_(0) {}
    explicit UhElement(int arity);

    static UhElement zero(int arity) { return UhElement(arity); }
    static UhElement one(int arity);
    static UhElement xi(int arity, int index);     // 1-based
    static UhElement x(int arity, int index);      // xi_i^2 as a polynomial coefficient
    static UhElement from_poly(MultiPoly p);
    static UhElement monomial(int arity, std::uint32_t mask, MultiPoly coeff);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Polynomial coefficient of the given subset (zero polynomial if absent).
    MultiPoly coeff(std::uint32_t mask) const;

    void add_term(std::uint32_t mask, const MultiPoly& coeff);

    UhElement operator-() const;
    UhElement& operator+=(const UhElement& o);
    UhElement& operator-=(const UhElement& o);
    friend UhElement operator+(UhElement a, const UhElement& b) { return a += b; }
    friend UhElement operator-(UhElement a, const UhElement& b) { return a -= b; }
    friend UhElement operator*(const UhElement& a, const UhElement& b);
    UhElement& operator*=(const UhElement& o) { return *this = *this * o; }

    UhElement& scale(const GaussianRational& c);
    friend UhElement operator*(const GaussianRational& c, UhElement a) { return a.scale(c); }

    friend bool operator==(const UhElement& a, const UhElement& b);
    friend bool operator!=(const UhElement& a, const UhElement& b) { return !(a == b); }

    /// a = even + odd by subset size mod 2.
    std::pair<UhElement, UhElement> parity_split() const;
    UhElement even_part() const { return parity_split().first; }
    UhElement odd_part() const { return parity_split().second; }

    bool is_homogeneous() const;  // all subsets of one parity (or zero)
    int parity() const;           // 0/1 for homogeneous nonzero elements

    /// Sum of the terms of maximal degree, where deg(x^a xi_S) = 2|a| + |S|.
    UhElement top_term() const;
    int grading_degree() const;  // -1 for zero

    /// Evaluates all polynomial coefficients at x = s (length = arity); the
    /// result lives in the Clifford algebra C_s.
    UhElement substitute_x(std::span<const GaussianRational> s) const;

    /// Substitutes x_index by a polynomial image inside every coefficient.
    UhElement substitute_x(int index, const MultiPoly& image) const;

    std::string str() const;  // canonical: by subset mask, then exponent order

private:
    int arity_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const UhElement& u);

/// Super-commutator [a,b] = ab - (-1)^{p(a)p(b)} ba, extended bilinearly over
/// the parity splits of non-homogeneous arguments.
UhElement super_commutator(const UhElement& a, const UhElement& b);

/// Element of the graded tensor product U(h_m) (x) U(h_n), with coefficients
/// realized as polynomials in the disjoint variable blocks x_1..x_m and
/// x_{m+1}..x_{m+n}. Multiplication carries the Koszul sign
/// (a(x)b)(c(x)d) = (-1)^{p(b)p(c)} ac (x) bd.
class TensorElement {
public:
    TensorElement() : left_(0), right_(0) {}
    TensorElement(int left_arity, int right_arity) : left_(left_arity), right_(right_arity) {}

    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using TermMap = std::map<Key, MultiPoly>;

    int left_arity() const { return left_; }
    int right_arity() const { return right_; }
    int total_arity() const { return left_ + right_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint32_t lmask, std::uint32_t rmask, const MultiPoly& coeff);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    TensorElement& scale(const GaussianRational& c);

    friend bool operator==(const TensorElement& a, const TensorElement& b);
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /// a (x) 1 and 1 (x) b embeddings; b's variables are shifted into the
    /// second block.
    static TensorElement left(const UhElement& a, int right_arity);
    static TensorElement right(int left_arity, const UhElement& b);
    static TensorElement tensor(const UhElement& a, const UhElement& b);

    /// Swaps the factors; with koszul = true the term a (x) b picks up
    /// (-1)^{p(a)p(b)}.
    TensorElement flip(bool koszul) const;

    std::string str() const;

private:
    int left_, right_;
    TermMap terms_;
};

/// Rewrites an element of U(h_{n1+n2}) in U(h_{n1}) (x) U(h_{n2}):
/// xi_k -> xi_k (x) 1 for k <= n1 and xi_{n1+k} -> 1 (x) xi_k. An algebra
/// isomorphism onto the graded tensor product.
TensorElement split_embed(const UhElement& a, int n1, int n2);

}  // namespace wq
