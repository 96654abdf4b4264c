#include "wq/yangian.hpp"

#include <algorithm>
#include <sstream>

#include "wq/symmetric.hpp"
#include "wq/wgen.hpp"

namespace wq {

UhElement phi_image(const YGen& g, int n) {
    if (g.i != 1 && g.i != -1) throw std::invalid_argument("phi_image: i must be +/-1");
    if (g.j != 1 && g.j != -1) throw std::invalid_argument("phi_image: j must be +/-1");
    if (g.m < 0) throw std::invalid_argument("phi_image: negative order");
    if (g.m == 0) return g.i == g.j ? UhElement::one(n) : UhElement::zero(n);
    GaussianRational sign(g.m % 2 == 0 ? 1 : -1);
    if (g.i == 1 && g.j == 1) return sign * u_gen(n, g.m, 0);
    if (g.i == -1 && g.j == 1) return sign * u_gen(n, g.m, 1);
    // T^{(m)}_{-i,-j} = (-1)^m T^{(m)}_{i,j}
    if (g.i == -1 && g.j == -1) return u_gen(n, g.m, 0);
    return u_gen(n, g.m, 1);  // (1,-1)
}

UhElement eta_elem(int i, int n) {
    UhElement t2 = phi_image({1, 1, 2}, n);
    UhElement acc = phi_image({1, -1, 1}, n);
    for (int k = 0; k < i; ++k) acc = super_commutator(t2, acc);
    GaussianRational scale(1);
    for (int k = 0; k < i; ++k) scale *= GaussianRational(Rational(-1, 2));
    return scale * acc;
}

UhElement z_central_elem(int two_i, int n) {
    if (two_i % 2 != 0) throw std::invalid_argument("z_central_elem: index must be even");
    UhElement e0 = eta_elem(0, n);
    UhElement ei = eta_elem(two_i, n);
    return GaussianRational(Rational(1, 2)) * super_commutator(e0, ei);
}

namespace {

int p_of(int i) { return i < 0 ? 1 : 0; }

UhElement bracket(const YGen& a, const YGen& b, int n) {
    return super_commutator(phi_image(a, n), phi_image(b, n));
}

}  // namespace

bool check_rtt(int n, int m, int r, int i, int j, int k, int l) {
    if (m < 1 || r < 1) throw std::invalid_argument("check_rtt: m, r >= 1 required");
    auto img = [&](int a, int b, int o) { return phi_image({a, b, o}, n); };
    UhElement lhs = bracket({i, j, m + 1}, {k, l, r - 1}, n) - bracket({i, j, m - 1}, {k, l, r + 1}, n);
    if ((p_of(i) * p_of(k) + p_of(i) * p_of(l) + p_of(k) * p_of(l)) % 2 != 0)
        lhs.scale(GaussianRational(-1));
    UhElement rhs = img(k, j, m) * img(i, l, r - 1) + img(k, j, m - 1) * img(i, l, r) -
                    img(k, j, r - 1) * img(i, l, m) - img(k, j, r) * img(i, l, m - 1);
    UhElement tail = (-(img(-k, j, m) * img(-i, l, r - 1))) + img(-k, j, m - 1) * img(-i, l, r) +
                     img(k, -j, r - 1) * img(i, -l, m) - img(k, -j, r) * img(i, -l, m - 1);
    if ((p_of(k) + p_of(l)) % 2 != 0) tail.scale(GaussianRational(-1));
    rhs += tail;
    return lhs == rhs;
}

bool check_threeterms(int n, int k, int i) {
    auto t = [&](int order) { return phi_image({1, 1, order}, n); };
    auto t_low = [&](int order) { return phi_image({1, -1, order}, n); };
    if (i == 0) return super_commutator(t(2 * k), eta_elem(0, n)) == GaussianRational(2) * t_low(2 * k);
    if (i == 1) {
        UhElement lhs = super_commutator(t(2 * k), eta_elem(1, n));
        UhElement rhs = GaussianRational(-2) * t_low(2 * k + 1) -
                        super_commutator(t(2 * k), eta_elem(0, n)) +
                        GaussianRational(2) * (t(2 * k) * eta_elem(0, n));
        return lhs == rhs;
    }
    UhElement lhs = super_commutator(t(2 * k), eta_elem(i, n));
    UhElement rhs = super_commutator(t(2 * k + 2), eta_elem(i - 2, n)) -
                    super_commutator(t(2 * k), eta_elem(i - 1, n)) +
                    GaussianRational(2) * (t(2 * k) * eta_elem(i - 1, n));
    return lhs == rhs;
}

bool check_tt_commute(int n, int k) {
    UhElement a = phi_image({1, 1, 2}, n);
    UhElement b = phi_image({1, 1, 2 * k}, n);
    return super_commutator(a, b).is_zero();
}

bool check_ind1(int n, int k) {
    UhElement lhs = super_commutator(phi_image({1, 1, 2}, n), phi_image({1, -1, 2 * k + 1}, n));
    return lhs == GaussianRational(2) * phi_image({1, -1, 2 * k + 2}, n);
}

bool check_ind2(int n, int k) {
    UhElement lhs = super_commutator(phi_image({1, 1, 2}, n), phi_image({1, -1, 2 * k}, n));
    UhElement rhs = GaussianRational(2) * phi_image({1, -1, 2 * k + 1}, n) +
                    GaussianRational(2) * phi_image({1, -1, 2 * k}, n) -
                    GaussianRational(2) * (phi_image({1, 1, 2 * k}, n) * phi_image({1, -1, 1}, n));
    return lhs == rhs;
}

TensorElement coproduct_image(const YGen& g, int m, int n) {
    TensorElement out(m, n);
    for (int s = 0; s <= g.m; ++s) {
        for (int k : {1, -1}) {
            int sign_exp = (p_of(g.i) + p_of(k)) * (p_of(g.j) + p_of(k));
            UhElement a = phi_image({g.i, k, s}, m);
            UhElement b = phi_image({k, g.j, g.m - s}, n);
            if (a.is_zero() || b.is_zero()) continue;
            TensorElement term = TensorElement::tensor(a, b);
            if (sign_exp % 2 != 0) term.scale(GaussianRational(-1));
            out += term;
        }
    }
    return out;
}

DiagramReport check_diagram(int m, int n, int K) {
    DiagramReport rep;
    for (int k = 0; k <= K; ++k) {
        for (int i : {1, -1}) {
            YGen g{i, 1, k};
            TensorElement direct = split_embed(phi_image(g, m + n), n, m);
            TensorElement viacop = coproduct_image(g, m, n);
            bool plain_ok = direct.flip(false) == viacop;
            bool koszul_ok = direct.flip(true) == viacop;
            if (!plain_ok) rep.plain_ok = false;
            if (!koszul_ok) rep.koszul_ok = false;
            if (!plain_ok && !koszul_ok && rep.witness.empty()) {
                std::ostringstream os;
                os << "T^(" << k << ")_{" << i << ",1} with split " << n << "+" << m;
                rep.witness = os.str();
            }
        }
    }
    rep.commutes = rep.plain_ok || rep.koszul_ok;
    if (rep.koszul_ok && !rep.plain_ok) rep.convention = "koszul";
    if (rep.plain_ok && !rep.koszul_ok) rep.convention = "plain";
    if (rep.plain_ok && rep.koszul_ok) rep.convention = "both";
    return rep;
}

GaussianRational gamma_action(const GammaF& f, const YGen& g) {
    if (g.m == 0) return GaussianRational(g.i == g.j ? 1 : 0);
    if (g.i != g.j || g.m % 2 != 0) return GaussianRational(0);
    return f.at(g.m / 2);  // (1,1) and (-1,-1) agree: (-1)^m = 1 for even m
}

const MatrixXg& YModule::action(const YGen& g) const {
    auto it = act.find({g.i, g.j, g.m});
    if (it == act.end()) throw std::invalid_argument("YModule: order out of range");
    return it->second;
}

MatrixXg YModule::grading_matrix() const {
    MatrixXg e = MatrixXg::Zero(dim(), dim());
    for (Eigen::Index k = 0; k < dim(); ++k) e(k, k) = grading(k);
    return e;
}

bool operator==(const YModule& a, const YModule& b) {
    if (a.order != b.order || a.dim() != b.dim()) return false;
    if (!is_zero(MatrixXg(a.grading_matrix() - b.grading_matrix()))) return false;
    for (const auto& [key, mat] : a.act) {
        auto it = b.act.find(key);
        if (it == b.act.end() || !mat_eq(mat, it->second)) return false;
    }
    return a.act.size() == b.act.size();
}

YModule lift_from_w(const SuperModule& m, int n, int order) {
    YModule y;
    y.grading = m.grading;
    y.order = order;
    const Eigen::Index d = m.dim();
    for (int o = 0; o <= order; ++o) {
        MatrixXg u0, u1;
        if (o == 0) {
            u0 = MatrixXg::Identity(d, d);
            u1 = MatrixXg::Zero(d, d);
        } else if (o > n) {
            u0 = MatrixXg::Zero(d, d);
            u1 = MatrixXg::Zero(d, d);
        } else {
            u0 = m.action(u_label(o, 0));
            u1 = m.action(u_label(o, 1));
        }
        GaussianRational sign(o % 2 == 0 ? 1 : -1);
        y.act[{1, 1, o}] = sign * u0;
        y.act[{-1, 1, o}] = sign * u1;
        y.act[{-1, -1, o}] = u0;
        y.act[{1, -1, o}] = u1;
    }
    return y;
}

YModule gamma_module(const GammaF& f, int order) {
    YModule y;
    y.grading = VectorXg(1);
    y.grading(0) = GaussianRational(1);
    y.order = order;
    for (int o = 0; o <= order; ++o)
        for (int i : {1, -1})
            for (int j : {1, -1}) {
                MatrixXg m(1, 1);
                m(0, 0) = gamma_action(f, {i, j, o});
                y.act[{i, j, o}] = m;
            }
    return y;
}

YModule twist(const YModule& m, const GammaF& f) {
    YModule y;
    y.grading = m.grading;
    y.order = m.order;
    const Eigen::Index d = m.dim();
    for (int o = 0; o <= m.order; ++o)
        for (int i : {1, -1})
            for (int j : {1, -1}) {
                MatrixXg acc = MatrixXg::Zero(d, d);
                for (int l = 0; 2 * l <= o; ++l) acc += m.action({i, j, o - 2 * l}) * f.at(l);
                y.act[{i, j, o}] = acc;
            }
    return y;
}

std::vector<EvenSeries> WeightDecomposition::weights() const {
    std::vector<EvenSeries> out;
    for (const auto& w : spaces) out.push_back(w.theta);
    return out;
}

namespace {

// Restriction of an invariant operator to the column span of basis.
MatrixXg restrict_to(const MatrixXg& a, const MatrixXg& basis) {
    MatrixXg image = a * basis;
    MatrixXg r(basis.cols(), basis.cols());
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        auto x = solve(basis, VectorXg(image.col(c)));
        if (!x) throw std::domain_error("restrict_to: subspace not invariant");
        r.col(c) = *x;
    }
    return r;
}

}  // namespace

WeightDecomposition weight_decomposition(const YModule& m) {
    const Eigen::Index d = m.dim();
    const int kmax = m.order / 2;
    std::vector<MatrixXg> ts;
    for (int k = 1; k <= kmax; ++k) ts.push_back(m.action({1, 1, 2 * k}));
    for (std::size_t a = 0; a < ts.size(); ++a)
        for (std::size_t b = a + 1; b < ts.size(); ++b)
            if (!mat_eq(ts[a] * ts[b], ts[b] * ts[a]))
                throw std::domain_error("weight_decomposition: T^{(2k)}_{1,1} actions do not commute");

    struct Block {
        MatrixXg basis;
        std::vector<GaussianRational> theta;
    };
    std::vector<Block> blocks{{MatrixXg::Identity(d, d), {}}};
    for (const auto& t : ts) {
        std::vector<Block> next;
        for (auto& blk : blocks) {
            MatrixXg r = restrict_to(t, blk.basis);
            const Eigen::Index b = r.rows();
            std::vector<GaussianRational> hints;
            for (Eigen::Index k = 0; k < b; ++k) hints.push_back(r(k, k));
            auto roots = poly_roots(char_poly(r), hints);
            Eigen::Index covered = 0;
            for (const auto& lambda : roots) {
                MatrixXg shifted = r - lambda * MatrixXg::Identity(b, b);
                MatrixXg power = MatrixXg::Identity(b, b);
                for (Eigen::Index k = 0; k < b; ++k) power = (power * shifted).eval();
                MatrixXg ker = nullspace(power);
                if (ker.cols() == 0) continue;
                covered += ker.cols();
                Block nb;
                nb.basis = blk.basis * ker;
                nb.theta = blk.theta;
                nb.theta.push_back(lambda);
                next.push_back(std::move(nb));
            }
            if (covered != b)
                throw std::domain_error("weight_decomposition: eigenvalues outside Q(i)");
        }
        blocks = std::move(next);
    }
    WeightDecomposition out;
    for (auto& blk : blocks) {
        WeightSpace ws;
        ws.theta = EvenSeries(blk.theta);
        ws.basis = blk.basis;
        bool merged = false;
        for (auto& existing : out.spaces)
            if (existing.theta == ws.theta) {
                MatrixXg joined(d, existing.basis.cols() + ws.basis.cols());
                joined << existing.basis, ws.basis;
                existing.basis = joined;
                merged = true;
            }
        if (!merged) out.spaces.push_back(std::move(ws));
    }
    std::sort(out.spaces.begin(), out.spaces.end(),
              [](const WeightSpace& a, const WeightSpace& b) { return a.theta < b.theta; });
    return out;
}

bool compare_S_with_twist(const SModuleSpec& spec) {
    if (spec.r != 0) throw std::invalid_argument("compare_S_with_twist: r = 0 required");
    const int n = spec.n();
    const int order = 2 * n + 2;
    YModule s_side = lift_from_w(build_S(spec), n, order);

    RootVector lroots{spec.lambda_roots};
    SuperModule v = build_V(lroots);
    auto lambda = spec.lambda();
    v = w_action(std::move(v), WGenSet::build(spec.q()), lambda);
    YModule v_side = lift_from_w(v, spec.q(), order);
    GammaF f = [&] {
        EvenSeries acc;
        for (const auto& t : spec.t) acc = acc * EvenSeries({t});
        return acc;
    }();
    return s_side == twist(v_side, f);
}

std::vector<MatrixXg> eta_matrices(const YModule& m, int imax) {
    const MatrixXg t2 = m.action({1, 1, 2});
    MatrixXg acc = m.action({1, -1, 1});
    std::vector<MatrixXg> out;
    GaussianRational half(Rational(-1, 2));
    for (int i = 0; i <= imax; ++i) {
        out.push_back(acc);
        acc = half * (t2 * acc - acc * t2);
    }
    return out;
}

bool check_generation(const SuperModule& wmod, int n) {
    const Eigen::Index d = wmod.dim();
    auto closure_dim = [&](const std::vector<MatrixXg>& gens, EchelonBasis& basis) {
        std::vector<MatrixXg> queue;
        auto vec_of = [&](const MatrixXg& mm) {
            VectorXg v(d * d);
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index i = 0; i < d; ++i) v(j * d + i) = mm(i, j);
            return v;
        };
        auto insert = [&](const MatrixXg& mm) {
            if (!basis.add(vec_of(mm))) return false;
            queue.push_back(mm);
            return true;
        };
        insert(MatrixXg::Identity(d, d));
        for (const auto& g : gens) insert(g);
        std::size_t head = 0;
        while (head < queue.size()) {
            MatrixXg mm = queue[head++];
            for (const auto& g : gens) insert(g * mm);
        }
        return basis.dim();
    };
    std::vector<MatrixXg> small, full;
    small.push_back(wmod.action(u_label(1, 1)));  // eta_0 acts as phi_0
    for (int i = 1; 2 * i <= n; ++i) small.push_back(wmod.action(u_label(2 * i, 0)));
    for (const auto& label : w_labels(n)) full.push_back(wmod.action(label));
    for (int k = 0; k <= n; ++k) {
        full.push_back(wmod.action(u_label(k, 0)));
        full.push_back(wmod.action(u_label(k, 1)));
    }
    EchelonBasis ba(d * d), bb(d * d);
    Eigen::Index da = closure_dim(small, ba);
    Eigen::Index db = closure_dim(full, bb);
    if (da != db) return false;
    // mutual containment
    for (Eigen::Index c = 0; c < ba.matrix().cols(); ++c)
        if (!bb.contains(VectorXg(ba.matrix().col(c)))) return false;
    return true;
}

std::optional<Recurrence> find_recurrence(std::span<const GaussianRational> values) {
    const int L = static_cast<int>(values.size());
    const int qmax = L / 2 - 1;
    for (int q = 0; q <= qmax; ++q) {
        for (int onset = q; onset <= L - 1 - (q + 1); ++onset) {
            const int rows = L - onset;
            MatrixXg a(rows, q);
            VectorXg b(rows);
            for (int m = onset; m < L; ++m) {
                for (int i = 1; i <= q; ++i) a(m - onset, i - 1) = values[m - i];
                b(m - onset) = -values[m];
            }
            auto c = solve(a, b);
            if (!c) continue;
            Recurrence rec;
            rec.onset = onset;
            for (int i = 0; i < q; ++i) rec.c.push_back((*c)(i));
            while (!rec.c.empty() && rec.c.back().is_zero()) rec.c.pop_back();
            return rec;
        }
    }
    return std::nullopt;
}

ChiInverseResult chi_inverse(std::span<const GaussianRational> a, std::span<const GaussianRational> c) {
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(c.size());
    int n = std::max(p > 0 ? 2 * p - 1 : 0, 2 * q);
    std::vector<GaussianRational> sigma(static_cast<std::size_t>(n) + 1, GaussianRational(0));
    if (n >= 0) sigma[0] = GaussianRational(1);
    for (int k = 0; k < p; ++k)
        if (2 * k + 1 <= n) sigma[2 * k + 1] = a[k];
    for (int k = 1; k <= q; ++k)
        if (2 * k <= n) sigma[2 * k] = c[k - 1];
    UniPoly monic(static_cast<std::size_t>(n) + 1, GaussianRational(0));
    for (int j = 0; j <= n; ++j) {
        GaussianRational coeff = sigma[j];
        if (j % 2 != 0) coeff = -coeff;
        monic[n - j] = coeff;  // coefficient of T^{n-j}
    }
    return {n, std::move(monic)};
}

}  // namespace wq
