#include "wq/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wq {

bool EchelonBasis::add(VectorXg v) {
    v = reduce(std::move(v));
    Eigen::Index piv = -1;
    for (Eigen::Index k = 0; k < dim_; ++k)
        if (!v(k).is_zero()) {
            piv = k;
            break;
        }
    if (piv < 0) return false;
    GaussianRational inv = v(piv).inv();
    for (Eigen::Index k = 0; k < dim_; ++k) v(k) *= inv;
    // back-reduce existing vectors against the new pivot
    for (std::size_t j = 0; j < vecs_.size(); ++j) {
        const GaussianRational& c = vecs_[j](piv);
        if (!c.is_zero()) vecs_[j] -= c * v;
    }
    vecs_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

VectorXg EchelonBasis::reduce(VectorXg v) const {
    for (std::size_t j = 0; j < vecs_.size(); ++j) {
        const GaussianRational& c = v(pivots_[j]);
        if (!c.is_zero()) v -= c * vecs_[j];
    }
    return v;
}

MatrixXg EchelonBasis::matrix() const {
    MatrixXg m(dim_, static_cast<Eigen::Index>(vecs_.size()));
    for (std::size_t j = 0; j < vecs_.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vecs_[j];
    return m;
}

namespace {

// Row echelon with partial structure: returns rank; records pivot columns.
Eigen::Index row_echelon(MatrixXg& m, std::vector<Eigen::Index>* pivot_cols = nullptr) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.row(r).swap(m.row(p));
        GaussianRational inv = m(r, c).inv();
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

Eigen::Index rank(MatrixXg m) { return row_echelon(m); }

GaussianRational determinant(MatrixXg m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    GaussianRational det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return GaussianRational(0);
        if (p != c) {
            m.row(c).swap(m.row(p));
            det = -det;
        }
        det *= m(c, c);
        GaussianRational inv = m(c, c).inv();
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<MatrixXg> inverse(const MatrixXg& m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    MatrixXg aug(n, 2 * n);
    aug << m, MatrixXg::Identity(n, n);
    if (row_echelon(aug) < n) return std::nullopt;
    return MatrixXg(aug.rightCols(n));
}

MatrixXg nullspace(const MatrixXg& m) {
    MatrixXg e = m;
    std::vector<Eigen::Index> piv;
    row_echelon(e, &piv);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatrixXg basis = MatrixXg::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        Eigen::Index fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = GaussianRational(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            basis(piv[r], static_cast<Eigen::Index>(k)) = -e(static_cast<Eigen::Index>(r), fc);
    }
    return basis;
}

std::optional<VectorXg> solve(const MatrixXg& a, const VectorXg& b) {
    MatrixXg aug(a.rows(), a.cols() + 1);
    aug << a, b;
    std::vector<Eigen::Index> piv;
    row_echelon(aug, &piv);
    for (auto c : piv)
        if (c == a.cols()) return std::nullopt;  // inconsistent
    VectorXg x = VectorXg::Zero(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

bool is_zero(const MatrixXg& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

std::vector<GaussianRational> char_poly(const MatrixXg& a) {
    const Eigen::Index d = a.rows();
    if (d != a.cols()) throw std::invalid_argument("char_poly: square matrix required");
    std::vector<GaussianRational> c(static_cast<std::size_t>(d) + 1, GaussianRational(0));
    c[d] = GaussianRational(1);
    MatrixXg m = MatrixXg::Identity(d, d);
    for (Eigen::Index k = 1; k <= d; ++k) {
        m = (a * m).eval();
        GaussianRational tr(0);
        for (Eigen::Index i = 0; i < d; ++i) tr += m(i, i);
        c[d - k] = tr / GaussianRational(-static_cast<long>(k));
        for (Eigen::Index i = 0; i < d; ++i) m(i, i) += c[d - k];
    }
    return c;
}

EchelonBasis spin(const std::vector<VectorXg>& seeds, const std::vector<MatrixXg>& ops) {
    if (seeds.empty()) throw std::invalid_argument("spin: no seed vectors");
    EchelonBasis basis(seeds.front().size());
    std::vector<VectorXg> queue;
    for (const auto& s : seeds)
        if (basis.add(s)) queue.push_back(s);
    std::size_t head = 0;
    while (head < queue.size()) {
        VectorXg v = queue[head++];
        for (const auto& op : ops) {
            VectorXg w = op * v;
            if (basis.add(w)) queue.push_back(std::move(w));
        }
    }
    return basis;
}

GaussianRational bareiss_determinant(const MatrixXg& m) {
    return bareiss_determinant<GaussianRational>(m, [](const GaussianRational& a, const GaussianRational& b) {
        return a / b;
    });
}

MultiPoly bareiss_determinant(const MatrixXp& m) {
    return bareiss_determinant<MultiPoly>(m, [](const MultiPoly& a, const MultiPoly& b) {
        auto q = a.divide_exact(b);
        if (!q) throw std::logic_error("bareiss_determinant: non-exact division");
        return *q;
    });
}

UniPoly poly_trim(UniPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, GaussianRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    UniPoly rem = poly_trim(a);
    UniPoly div = poly_trim(b);
    if (div.empty()) throw std::domain_error("poly_divmod: division by zero");
    if (rem.size() < div.size()) return {{}, rem};
    UniPoly quot(rem.size() - div.size() + 1, GaussianRational(0));
    GaussianRational lead_inv = div.back().inv();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        std::size_t k = shift + div.size() - 1;
        if (rem[k].is_zero()) continue;
        GaussianRational q = rem[k] * lead_inv;
        quot[shift] = q;
        for (std::size_t j = 0; j < div.size(); ++j) rem[shift + j] -= q * div[j];
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussianRational inv = a.back().inv();
        for (auto& c : a) c *= inv;
    }
    return a;
}

UniPoly poly_derivative(const UniPoly& p) {
    UniPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(GaussianRational(static_cast<long>(k)) * p[k]);
    return poly_trim(std::move(out));
}

GaussianRational poly_eval(const UniPoly& p, const GaussianRational& x) {
    GaussianRational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

UniPoly poly_squarefree_part(const UniPoly& p) {
    UniPoly t = poly_trim(p);
    if (t.size() <= 1) return t;
    UniPoly g = poly_gcd(t, poly_derivative(t));
    auto [q, r] = poly_divmod(t, g);
    if (!r.empty()) throw std::logic_error("poly_squarefree_part: gcd did not divide");
    return q;
}

namespace {

struct GaussInt {
    mpz_class a, b;  // a + b i
};

// All Gaussian integers with the given norm, up to nothing (all 8 unit/swap
// variants included).
std::vector<GaussInt> with_norm(const mpz_class& n) {
    std::vector<GaussInt> out;
    mpz_class a = 0;
    while (a * a <= n) {
        mpz_class rest = n - a * a;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class b;
            mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
            for (int sa = -1; sa <= 1; sa += 2)
                for (int sb = -1; sb <= 1; sb += 2) {
                    out.push_back({sa * a, sb * b});
                    out.push_back({sa * b, sb * a});
                }
        }
        ++a;
    }
    return out;
}

std::vector<mpz_class> divisors_of(mpz_class n, std::size_t cap) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    mpz_class d = 1;
    while (d * d <= n) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
            if (out.size() > cap) throw std::runtime_error("poly_roots: divisor enumeration exceeded bound");
        }
        ++d;
        if (d > 2000000) throw std::runtime_error("poly_roots: trial division exceeded bound");
    }
    return out;
}

// Roots in Q(i) of a squarefree polynomial; may throw on oversized searches.
void roots_squarefree(UniPoly p, const std::vector<GaussianRational>& hints,
                      std::vector<GaussianRational>& out) {
    p = poly_trim(std::move(p));
    for (;;) {
        if (p.size() <= 1) return;
        if (p.size() == 2) {
            out.push_back(-p[0] / p[1]);
            return;
        }
        if (!p.empty() && p[0].is_zero()) {
            out.push_back(GaussianRational(0));
            p.erase(p.begin());
            continue;
        }
        bool found = false;
        for (const auto& h : hints) {
            if (std::find(out.begin(), out.end(), h) != out.end()) continue;
            if (poly_eval(p, h).is_zero()) {
                out.push_back(h);
                auto [q, r] = poly_divmod(p, UniPoly{-h, GaussianRational(1)});
                p = std::move(q);
                found = true;
                break;
            }
        }
        if (found) continue;
        if (p.size() == 3) {
            // monic-normalized quadratic formula with exact square root
            GaussianRational a = p[2], b = p[1], c = p[0];
            GaussianRational disc = b * b - GaussianRational(4) * a * c;
            auto s = exact_sqrt(disc);
            if (!s) return;
            GaussianRational twoa = GaussianRational(2) * a;
            out.push_back((-b + *s) / twoa);
            out.push_back((-b - *s) / twoa);
            return;
        }
        // degree >= 3: candidate roots n/d with n | p_0 and d | p_lead in Z[i]
        mpz_class denlcm = 1;
        for (const auto& co : p) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), denlcm.get_mpz_t(), co.re().get_den().get_mpz_t());
            mpz_lcm(denlcm.get_mpz_t(), l.get_mpz_t(), co.im().get_den().get_mpz_t());
        }
        auto to_int = [&](const GaussianRational& g) {
            return GaussInt{mpz_class(g.re().get_num() * (denlcm / g.re().get_den())),
                            mpz_class(g.im().get_num() * (denlcm / g.im().get_den()))};
        };
        GaussInt c0 = to_int(p.front());
        GaussInt cd = to_int(p.back());
        mpz_class n0 = c0.a * c0.a + c0.b * c0.b;
        mpz_class nd = cd.a * cd.a + cd.b * cd.b;
        if (n0 == 0) throw std::logic_error("roots_squarefree: zero constant term");
        constexpr std::size_t kCap = 20000;
        std::vector<GaussInt> nums, dens;
        for (const auto& dv : divisors_of(n0, kCap))
            for (auto& g : with_norm(dv)) nums.push_back(g);
        for (const auto& dv : divisors_of(nd, kCap))
            for (auto& g : with_norm(dv)) dens.push_back(g);
        if (nums.size() * dens.size() > 200000)
            throw std::runtime_error("poly_roots: candidate set exceeded bound");
        bool any = false;
        for (const auto& nu : nums) {
            if (any) break;
            for (const auto& de : dens) {
                if (de.a == 0 && de.b == 0) continue;
                mpz_class nn = de.a * de.a + de.b * de.b;
                GaussianRational cand(Rational(nu.a * de.a + nu.b * de.b, nn),
                                      Rational(nu.b * de.a - nu.a * de.b, nn));
                if (poly_eval(p, cand).is_zero()) {
                    out.push_back(cand);
                    auto [q, r] = poly_divmod(p, UniPoly{-cand, GaussianRational(1)});
                    p = std::move(q);
                    any = true;
                    break;
                }
            }
        }
        if (!any) return;  // no further roots in Q(i)
    }
}

}  // namespace

std::vector<GaussianRational> poly_roots(const UniPoly& p, const std::vector<GaussianRational>& hints) {
    UniPoly sf = poly_squarefree_part(p);
    std::vector<GaussianRational> out;
    roots_squarefree(std::move(sf), hints, out);
    return out;
}

}  // namespace wq
