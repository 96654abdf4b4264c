#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wq/linalg.hpp"
#include "wq/uh.hpp"

namespace wq {

/// Matrix T acting on coordinate vectors in the basis xi_1..xi_n:
/// zero diagonal, t_ij = x_j for i < j and -x_j for i > j.
MatrixXp transfer_matrix(int n);

/// phi_0 = xi_1 + ... + xi_n; phi_k = T^k(phi_0).
UhElement phi_gen(int n, int k);

/// z_k: for odd k <= n-1 the even part of the alternating-sign product sum
/// over (k+1)-subsets; for even k, half the anticommutator [phi_0, phi_k]/2.
UhElement z_gen(int n, int k);

/// u_k(d) over an index interval [lo, hi] (1-based, inclusive): sum over
/// ascending k-subsets of the alternating product, with factor j of k carrying
/// (-1)^{k-j} on xi, then the even (d = 0) or odd (d = 1) part.
/// u_0(0) = 1, u_0(1) = 0, and u_k(d) = 0 for k > hi - lo + 1.
UhElement u_gen(int n, int k, int d, int lo, int hi);
UhElement u_gen(int n, int k, int d);  // full range [1, n]

/// All W-algebra generators for a fixed n. phi_0..phi_n, z_0..z_{n-1},
/// u_k(0) and u_k(1) for k = 0..n.
struct WGenSet {
    int n = 0;
    std::vector<UhElement> phi;
    std::vector<UhElement> z;
    std::vector<UhElement> u_even;
    std::vector<UhElement> u_odd;

    static WGenSet build(int n);
    const UhElement& u(int k, int d) const { return d == 0 ? u_even[k] : u_odd[k]; }

    friend bool operator==(const WGenSet&, const WGenSet&) = default;
};

/// Gram matrix of the form B(x, y) = [x, y] on phi_0..phi_{n-1}; entries are
/// even, xi-free polynomials.
MatrixXp gram_matrix(int n);

struct GramDetResult {
    bool holds = false;
    GaussianRational c;  // det Gamma / (p^2 x_1...x_n) when constant
};

/// det Gamma = c p^2 x_1...x_n with p = prod_{i<j}(x_i + x_j); returns whether
/// the quotient is a nonzero constant and its value.
GramDetResult verify_gram_det(int n);

struct IdentityReport {
    bool holds = true;
    std::string witness;  // first counterexample, empty when holds
};

/// [phi_i, phi_j] = (-1)^i 2 z_{i+j} for even i+j, 0 for odd; checked for all
/// 0 <= i, j <= imax with z from the anticommutator formula.
IdentityReport check_oddrel(int n, int imax);

/// u_k(d) = sum_{e+f=d} sum_{a+b=k} (-1)^{eb} u+_a(e) u-_b(f) under
/// split_embed at the given position, for all k <= n and both parities.
IdentityReport check_decomposition(int n, int split_at);

/// z_k (even k) is S_n-invariant and collapses under x_{n-1} = t, x_n = -t to
/// the arity n-2 value.
bool check_q_symmetry(int n, int k);

/// top_term(z_k) = sigma_{k+1}(x) for odd k; even z_k are xi-free of grading
/// degree 2k+2 and equal their own top term.
IdentityReport check_leading_terms(int n);

/// Jacobian of {z_0, z_2, ...} and {sigma_2, sigma_4, ...} (n functions) is
/// nonsingular at the given point (a certificate of algebraic independence).
bool check_jacobian_independence(int n, std::span<const GaussianRational> point);
bool check_jacobian_independence(int n);  // at (1, 2, 3, 5, 8, 13, ...)

}  // namespace wq
