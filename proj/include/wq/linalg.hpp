#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "wq/multipoly.hpp"
#include "wq/scalar.hpp"

namespace wq {

using MatrixXg = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXg = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using MatrixXp = Eigen::Matrix<MultiPoly, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced-vector store with unit pivots; insertion order is deterministic.
class EchelonBasis {
public:
    explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

    Eigen::Index dim() const { return static_cast<Eigen::Index>(vecs_.size()); }
    Eigen::Index ambient_dim() const { return dim_; }

    /// Reduces v against the basis; inserts the normalized remainder when it
    /// is nonzero. Returns true if the span grew.
    bool add(VectorXg v);

    /// Remainder of v after reduction (zero iff v lies in the span).
    VectorXg reduce(VectorXg v) const;
    bool contains(const VectorXg& v) const { return reduce(v).isZero(0); }

    MatrixXg matrix() const;  // basis vectors as columns

private:
    Eigen::Index dim_;
    std::vector<VectorXg> vecs_;
    std::vector<Eigen::Index> pivots_;
};

Eigen::Index rank(MatrixXg m);
GaussianRational determinant(MatrixXg m);
std::optional<MatrixXg> inverse(const MatrixXg& m);

/// Basis of the right nullspace, as columns (may have zero columns count).
MatrixXg nullspace(const MatrixXg& m);

/// One solution of A x = b, if consistent.
std::optional<VectorXg> solve(const MatrixXg& a, const VectorXg& b);

bool is_zero(const MatrixXg& m);

inline bool mat_eq(const MatrixXg& a, const MatrixXg& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && is_zero(a - b);
}

/// Monic characteristic polynomial, ascending coefficients (c_0 .. c_d = 1);
/// Faddeev-LeVerrier, division only by integers.
std::vector<GaussianRational> char_poly(const MatrixXg& a);

/// Smallest invariant subspace containing the seed vectors, closed under the
/// given operators ("spinning"). Returns the echelonized basis.
EchelonBasis spin(const std::vector<VectorXg>& seeds, const std::vector<MatrixXg>& ops);

/// Fraction-free Bareiss determinant over an integral domain; Divide(a, b)
/// must return the exact quotient a / b.
template <typename Scalar, typename Divide>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m, Divide divide) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("bareiss_determinant: square matrix required");
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Eigen::Index p = k + 1;
            while (p < n && m(p, k) == Scalar(0)) ++p;
            if (p == n) return Scalar(0);
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    if (sign < 0) return -det;
    return det;
}

GaussianRational bareiss_determinant(const MatrixXg& m);
MultiPoly bareiss_determinant(const MatrixXp& m);

// -- univariate polynomials over GaussianRational (ascending coefficients) --

using UniPoly = std::vector<GaussianRational>;

UniPoly poly_trim(UniPoly p);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
/// Division with remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b);
UniPoly poly_gcd(UniPoly a, UniPoly b);  // monic gcd
UniPoly poly_derivative(const UniPoly& p);
GaussianRational poly_eval(const UniPoly& p, const GaussianRational& x);
UniPoly poly_squarefree_part(const UniPoly& p);

/// All roots of p that lie in Q(i), each listed once. `hints` are tried first;
/// degrees >= 3 fall back to Gaussian-integer divisor enumeration of the
/// extreme coefficients and may throw when that search exceeds its bound.
std::vector<GaussianRational> poly_roots(const UniPoly& p, const std::vector<GaussianRational>& hints = {});

}  // namespace wq
