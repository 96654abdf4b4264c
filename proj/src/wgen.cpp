#include "wq/wgen.hpp"

#include <sstream>

#include "wq/symmetric.hpp"

namespace wq {

MatrixXp transfer_matrix(int n) {
    MatrixXp t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                t(i, j) = MultiPoly::zero(n);
            else if (i < j)
                t(i, j) = MultiPoly::variable(n, j + 1);
            else
                t(i, j) = -MultiPoly::variable(n, j + 1);
        }
    return t;
}

UhElement phi_gen(int n, int k) {
    MatrixXp t = transfer_matrix(n);
    Eigen::Matrix<MultiPoly, Eigen::Dynamic, 1> c(n);
    for (int i = 0; i < n; ++i) c(i) = MultiPoly::one(n);
    for (int step = 0; step < k; ++step) c = (t * c).eval();
    UhElement out(n);
    for (int i = 0; i < n; ++i) out += UhElement::monomial(n, 1u << i, c(i));
    return out;
}

namespace {

// Sum over ascending k-subsets of [lo, hi] of products of (x +/- xi) factors;
// factor j of k carries (-1)^{k-j} on xi (the last factor always +).
UhElement alternating_subset_sum(int n, int k, int lo, int hi) {
    if (k == 0) return UhElement::one(n);
    UhElement total = UhElement::zero(n);
    std::vector<int> idx(k);
    // iterate ascending k-subsets of {lo..hi}
    for (int i = 0; i < k; ++i) idx[i] = lo + i;
    if (lo + k - 1 > hi) return total;
    for (;;) {
        UhElement prod = UhElement::one(n);
        for (int j = 0; j < k; ++j) {
            UhElement factor = UhElement::x(n, idx[j]);
            UhElement xi = UhElement::xi(n, idx[j]);
            if ((k - 1 - j) % 2 == 0)
                factor += xi;
            else
                factor -= xi;
            prod *= factor;
        }
        total += prod;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == hi - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return total;
}

}  // namespace

UhElement u_gen(int n, int k, int d, int lo, int hi) {
    if (lo < 1 || hi > n || d < 0 || d > 1) throw std::invalid_argument("u_gen: invalid range");
    if (k < 0) throw std::invalid_argument("u_gen: negative order");
    if (k == 0) return d == 0 ? UhElement::one(n) : UhElement::zero(n);
    if (k > hi - lo + 1) return UhElement::zero(n);
    UhElement sum = alternating_subset_sum(n, k, lo, hi);
    auto [even, odd] = sum.parity_split();
    return d == 0 ? even : odd;
}

UhElement u_gen(int n, int k, int d) { return u_gen(n, k, d, 1, n); }

UhElement z_gen(int n, int k) {
    if (k % 2 == 1) {
        if (k > n - 1) throw std::invalid_argument("z_gen: odd k must satisfy k <= n-1");
        return u_gen(n, k + 1, 0);
    }
    UhElement half = super_commutator(phi_gen(n, 0), phi_gen(n, k));
    return GaussianRational(Rational(1, 2)) * half;
}

WGenSet WGenSet::build(int n) {
    WGenSet g;
    g.n = n;
    for (int k = 0; k <= n; ++k) g.phi.push_back(phi_gen(n, k));
    for (int k = 0; k < n; ++k) g.z.push_back(z_gen(n, k));
    for (int k = 0; k <= n; ++k) {
        g.u_even.push_back(u_gen(n, k, 0));
        g.u_odd.push_back(u_gen(n, k, 1));
    }
    return g;
}

MatrixXp gram_matrix(int n) {
    std::vector<UhElement> phis;
    for (int k = 0; k < n; ++k) phis.push_back(phi_gen(n, k));
    MatrixXp gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            UhElement b = super_commutator(phis[i], phis[j]);
            // entries are central: a single xi-free term
            MultiPoly entry = MultiPoly::zero(n);
            for (const auto& [mask, p] : b.terms()) {
                if (mask != 0) throw std::logic_error("gram_matrix: non-central bracket");
                entry = p;
            }
            gram(i, j) = entry;
        }
    return gram;
}

GramDetResult verify_gram_det(int n) {
    MultiPoly det = bareiss_determinant(gram_matrix(n));
    MultiPoly expected = MultiPoly::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            MultiPoly s = MultiPoly::variable(n, i) + MultiPoly::variable(n, j);
            expected *= s * s;
        }
    for (int i = 1; i <= n; ++i) expected *= MultiPoly::variable(n, i);
    auto q = det.divide_exact(expected);
    if (!q || !q->is_constant() || q->is_zero()) return {false, GaussianRational(0)};
    return {true, q->constant_value()};
}

IdentityReport check_oddrel(int n, int imax) {
    std::vector<UhElement> phis;
    for (int k = 0; k <= 2 * imax; ++k) phis.push_back(phi_gen(n, k));
    // z_{i+j} by the anticommutator formula, computed once per even sum
    std::map<int, UhElement> z_cache;
    for (int sum = 0; sum <= 2 * imax; sum += 2)
        z_cache.emplace(sum, GaussianRational(Rational(1, 2)) * super_commutator(phis[0], phis[sum]));
    // the bracket of two odd elements is symmetric, so i <= j covers all pairs
    for (int i = 0; i <= imax; ++i) {
        for (int j = i; j <= imax; ++j) {
            UhElement lhs = super_commutator(phis[i], phis[j]);
            UhElement rhs = UhElement::zero(n);
            if ((i + j) % 2 == 0)
                rhs = GaussianRational(i % 2 == 0 ? 2 : -2) * z_cache.at(i + j);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "[phi_" << i << ", phi_" << j << "] = " << lhs.str();
                return {false, os.str()};
            }
        }
    }
    return {true, {}};
}

IdentityReport check_decomposition(int n, int split_at) {
    if (split_at < 1 || split_at > n - 1) throw std::invalid_argument("check_decomposition: bad split");
    const int n1 = split_at, n2 = n - split_at;
    for (int k = 0; k <= n; ++k) {
        for (int d = 0; d <= 1; ++d) {
            TensorElement lhs = split_embed(u_gen(n, k, d), n1, n2);
            TensorElement rhs(n1, n2);
            for (int e = 0; e <= 1; ++e) {
                int f = (d - e + 2) % 2;
                for (int a = 0; a <= k; ++a) {
                    int b = k - a;
                    TensorElement term = split_embed(u_gen(n, a, e, 1, n1) * u_gen(n, b, f, n1 + 1, n), n1, n2);
                    if ((e * b) % 2 != 0) term.scale(GaussianRational(-1));
                    rhs += term;
                }
            }
            if (lhs != rhs) {
                std::ostringstream os;
                os << "u_" << k << "(" << d << ") split " << n1 << "+" << n2;
                return {false, os.str()};
            }
        }
    }
    return {true, {}};
}

bool check_q_symmetry(int n, int k) {
    if (k % 2 != 0 || n < 2) throw std::invalid_argument("check_q_symmetry: need even k, n >= 2");
    UhElement z = z_gen(n, k);
    for (const auto& [mask, p] : z.terms())
        if (mask != 0) return false;  // even z_k must be xi-free
    MultiPoly p = z.coeff(0);

    // S_n-invariance under all adjacent transpositions
    for (int i = 1; i < n; ++i) {
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[j] = j + 1;
        std::swap(perm[i - 1], perm[i]);
        if (p.permute_vars(perm) != p) return false;
    }

    // x_{n-1} = t, x_n = -t collapses to z_k in the remaining n-2 variables
    MultiPoly sub = p.substitute(n, -MultiPoly::variable(n, n - 1));
    if (sub.depends_on(n - 1) || sub.depends_on(n)) return false;
    MultiPoly expected = z_gen(n - 2, k).coeff(0).extend_arity(n);
    return sub == expected;
}

IdentityReport check_leading_terms(int n) {
    for (int k = 0; k < n; ++k) {
        UhElement z = z_gen(n, k);
        std::ostringstream os;
        if (k % 2 == 1) {
            UhElement top = z.top_term();
            UhElement expected = UhElement::from_poly(elementary_symmetric_poly(k + 1, n));
            if (top != expected) {
                os << "top(z_" << k << ") != sigma_" << k + 1;
                return {false, os.str()};
            }
            if (z.grading_degree() != 2 * k + 2) {
                os << "deg z_" << k << " != " << 2 * k + 2;
                return {false, os.str()};
            }
        } else {
            bool xi_free = true;
            for (const auto& [mask, p] : z.terms())
                if (mask != 0) xi_free = false;
            if (!xi_free || z.grading_degree() != 2 * k + 2 || z.top_term() != z) {
                os << "even z_" << k << " leading-term failure";
                return {false, os.str()};
            }
        }
    }
    return {true, {}};
}

bool check_jacobian_independence(int n, std::span<const GaussianRational> point) {
    // n functions: z_0, z_2, ..., then sigma_2, sigma_4, ...
    std::vector<MultiPoly> funcs;
    std::vector<MultiPoly> zs = z_values_sym(n, n / 2);
    for (int k = 0; 2 * k <= n - 1; ++k) funcs.push_back(zs[k]);
    for (int k = 1; 2 * k <= n; ++k) funcs.push_back(elementary_symmetric_poly(2 * k, n));
    if (static_cast<int>(funcs.size()) != n) throw std::logic_error("check_jacobian_independence: count");
    MatrixXg jac(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac(i, j) = funcs[i].derivative(j + 1).eval(point);
    return !determinant(jac).is_zero();
}

bool check_jacobian_independence(int n) {
    std::vector<GaussianRational> point;
    long a = 1, b = 2;
    for (int i = 0; i < n; ++i) {
        point.push_back(GaussianRational(a));
        long next = a + b;
        a = b;
        b = next;
    }
    return check_jacobian_independence(n, point);
}

}  // namespace wq
