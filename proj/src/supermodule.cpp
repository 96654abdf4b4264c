#include "wq/supermodule.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "wq/symmetric.hpp"

namespace wq {

std::pair<Eigen::Index, Eigen::Index> SuperModule::graded_dims() const {
    Eigen::Index d0 = 0, d1 = 0;
    for (Eigen::Index k = 0; k < grading.size(); ++k)
        (grading(k) == GaussianRational(1) ? d0 : d1)++;
    return {d0, d1};
}

MatrixXg SuperModule::grading_matrix() const {
    MatrixXg e = MatrixXg::Zero(dim(), dim());
    for (Eigen::Index k = 0; k < dim(); ++k) e(k, k) = grading(k);
    return e;
}

const MatrixXg& SuperModule::action(const std::string& label) const {
    auto it = actions.find(label);
    if (it == actions.end()) throw std::invalid_argument("SuperModule: no action for label " + label);
    return it->second;
}

int SuperModule::action_parity(const std::string& label) const {
    const MatrixXg& a = action(label);
    MatrixXg e = grading_matrix();
    if (mat_eq(e * a, a * e)) return 0;
    MatrixXg anti = e * a + a * e;
    if (is_zero(anti)) return 1;
    throw std::domain_error("SuperModule: action " + label + " is not parity-homogeneous");
}

std::vector<std::string> SuperModule::labels() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : actions) out.push_back(k);
    return out;
}

std::string xi_label(int i) { return "xi" + std::to_string(i); }
std::string phi_label(int k) { return "phi" + std::to_string(k); }
std::string z_label(int k) { return "z" + std::to_string(k); }
std::string u_label(int k, int d) { return "u" + std::to_string(k) + "(" + std::to_string(d) + ")"; }

std::vector<std::string> w_labels(int n) {
    std::vector<std::string> out;
    for (int k = 0; k < n; ++k) out.push_back(phi_label(k));
    for (int k = 0; k < n; ++k) out.push_back(z_label(k));
    return out;
}

std::vector<GaussianRational> RootVector::s() const {
    std::vector<GaussianRational> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(r * r);
    return out;
}

int RootVector::m() const {
    int c = 0;
    for (const auto& r : roots)
        if (!r.is_zero()) ++c;
    return c;
}

bool RootVector::regular() const { return m() == n(); }

bool RootVector::typical() const {
    auto sv = s();
    for (std::size_t i = 0; i < sv.size(); ++i)
        for (std::size_t j = i + 1; j < sv.size(); ++j)
            if ((sv[i] + sv[j]).is_zero()) return false;
    return true;
}

namespace {

MatrixXg kron(const MatrixXg& a, const MatrixXg& b) {
    MatrixXg out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

MatrixXg eps2() {
    MatrixXg e(2, 2);
    e << GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(-1);
    return e;
}

// 2x2 block matrices of a Clifford pair with roots (ra, rb):
// xi_a = [[0, ra], [ra, 0]], xi_b = [[0, rb i], [-rb i, 0]].
MatrixXg pair_first(const GaussianRational& ra) {
    MatrixXg m(2, 2);
    m << GaussianRational(0), ra, ra, GaussianRational(0);
    return m;
}
MatrixXg pair_second(const GaussianRational& rb) {
    GaussianRational v = rb * GaussianRational::i();
    MatrixXg m(2, 2);
    m << GaussianRational(0), v, -v, GaussianRational(0);
    return m;
}

// Jordan-Wigner embedding of a 2x2 block at position `blk` out of `blocks`:
// eps (x) ... (x) eps (x) g (x) I (x) ... (x) I.
MatrixXg jw_embed(const MatrixXg& g, int blk, int blocks) {
    MatrixXg acc = MatrixXg::Identity(1, 1);
    for (int b = 0; b < blocks; ++b) {
        if (b < blk)
            acc = kron(acc, eps2());
        else if (b == blk)
            acc = kron(acc, g);
        else
            acc = kron(acc, MatrixXg::Identity(2, 2));
    }
    return acc;
}

}  // namespace

SuperModule build_V(const RootVector& roots) {
    const int n = roots.n();
    std::vector<int> nz;
    for (int i = 0; i < n; ++i)
        if (!roots.roots[i].is_zero()) nz.push_back(i);
    const int m = static_cast<int>(nz.size());

    std::vector<GaussianRational> block_roots;
    for (int i : nz) block_roots.push_back(roots.roots[i]);
    bool dummy = (m % 2 != 0);
    if (dummy) block_roots.push_back(GaussianRational(1));
    const int blocks = static_cast<int>(block_roots.size()) / 2;
    const Eigen::Index dim = Eigen::Index(1) << blocks;

    SuperModule mod;
    mod.grading = VectorXg(dim);
    for (Eigen::Index v = 0; v < dim; ++v)
        mod.grading(v) = GaussianRational(std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? 1 : -1);

    for (int i = 0; i < n; ++i) mod.actions[xi_label(i + 1)] = MatrixXg::Zero(dim, dim);
    for (int k = 0; k < m; ++k) {
        int blk = k / 2;
        MatrixXg local = (k % 2 == 0) ? pair_first(block_roots[k]) : pair_second(block_roots[k]);
        mod.actions[xi_label(nz[k] + 1)] = jw_embed(local, blk, blocks);
    }
    return mod;
}

std::vector<MatrixXg> xi_mask_table(const std::vector<MatrixXg>& xi_actions, Eigen::Index dim) {
    const std::size_t n = xi_actions.size();
    std::vector<MatrixXg> table(std::size_t(1) << n);
    table[0] = MatrixXg::Identity(dim, dim);
    for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
        int low = std::countr_zero(mask);
        table[mask] = xi_actions[static_cast<std::size_t>(low)] * table[mask & (mask - 1u)];
    }
    return table;
}

MatrixXg uh_action(const UhElement& el, std::span<const GaussianRational> s,
                   const std::vector<MatrixXg>& xi_actions, const std::vector<MatrixXg>& mask_table) {
    if (static_cast<int>(s.size()) != el.arity() || xi_actions.size() != s.size())
        throw std::invalid_argument("uh_action: arity mismatch");
    const Eigen::Index d = xi_actions.empty() ? 1 : xi_actions.front().rows();
    MatrixXg out = MatrixXg::Zero(d, d);
    for (const auto& [mask, p] : el.terms()) out += p.eval(s) * mask_table[mask];
    return out;
}

MatrixXg uh_action(const UhElement& el, std::span<const GaussianRational> s,
                   const std::vector<MatrixXg>& xi_actions) {
    const Eigen::Index d = xi_actions.empty() ? 1 : xi_actions.front().rows();
    return uh_action(el, s, xi_actions, xi_mask_table(xi_actions, d));
}

SuperModule w_action(SuperModule m, const WGenSet& gens, std::span<const GaussianRational> s) {
    const int n = gens.n;
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("w_action: arity mismatch");
    std::vector<MatrixXg> xi;
    for (int i = 1; i <= n; ++i) xi.push_back(m.action(xi_label(i)));
    // Clifford relations must hold before restricting
    const Eigen::Index d = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            MatrixXg anti = xi[i] * xi[j] + xi[j] * xi[i];
            MatrixXg expected = MatrixXg::Zero(d, d);
            if (i == j) expected = (GaussianRational(2) * s[i]) * MatrixXg::Identity(d, d);
            if (!mat_eq(anti, expected)) throw std::invalid_argument("w_action: B_s relations violated");
        }
    std::vector<MatrixXg> table = xi_mask_table(xi, d);
    for (int k = 0; k <= n; ++k) m.actions[phi_label(k)] = uh_action(gens.phi[k], s, xi, table);
    for (int k = 0; k < n; ++k) m.actions[z_label(k)] = uh_action(gens.z[k], s, xi, table);
    for (int k = 0; k <= n; ++k) {
        m.actions[u_label(k, 0)] = uh_action(gens.u(k, 0), s, xi, table);
        m.actions[u_label(k, 1)] = uh_action(gens.u(k, 1), s, xi, table);
    }
    return m;
}

namespace {

// Solution space of X a_M(g) = a_N(g) X plus the parity constraint
// X e_M = sign e_N X; returns a basis of vectorized maps.
MatrixXg intertwiner_space(const SuperModule& m, const SuperModule& n,
                           const std::vector<std::string>& labels, int sign) {
    const Eigen::Index dm = m.dim(), dn = n.dim();
    const Eigen::Index vars = dm * dn;
    MatrixXg sys(static_cast<Eigen::Index>(labels.size() + 1) * vars, vars);
    Eigen::Index row0 = 0;
    auto emit = [&](const MatrixXg& am, const MatrixXg& an, const GaussianRational& sgn) {
        // vec(X am) - sgn vec(an X) = (am^T kron I - sgn I kron an) vec(X)
        for (Eigen::Index i = 0; i < dn; ++i)
            for (Eigen::Index j = 0; j < dm; ++j) {
                Eigen::Index row = row0 + j * dn + i;
                for (Eigen::Index k = 0; k < vars; ++k) sys(row, k) = GaussianRational(0);
                for (Eigen::Index jj = 0; jj < dm; ++jj) sys(row, jj * dn + i) += am(jj, j);
                for (Eigen::Index ii = 0; ii < dn; ++ii) sys(row, j * dn + ii) -= sgn * an(i, ii);
            }
        row0 += vars;
    };
    for (const auto& label : labels) emit(m.action(label), n.action(label), GaussianRational(1));
    emit(m.grading_matrix(), n.grading_matrix(), GaussianRational(sign));
    return nullspace(sys);
}

MatrixXg unvec(const VectorXg& v, Eigen::Index rows, Eigen::Index cols) {
    MatrixXg x(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = v(j * rows + i);
    return x;
}

// Invertible element of a matrix pencil span, if one exists. The determinant
// is a polynomial of degree <= d in the coefficients, so a full grid
// {0..d}^k contains a nonsingular point whenever one exists.
std::optional<MatrixXg> invertible_in_span(const std::vector<MatrixXg>& basis) {
    if (basis.empty()) return std::nullopt;
    for (const auto& b : basis)
        if (!determinant(b).is_zero()) return b;
    const Eigen::Index d = basis.front().rows();
    const std::size_t k = basis.size();
    long width = static_cast<long>(d) + 1;
    double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(width);
    if (total > 300000.0) throw std::runtime_error("invertible_in_span: search grid exceeded bound");
    std::vector<long> coef(k, 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < k && coef[pos] == width - 1) coef[pos++] = 0;
        if (pos == k) break;
        ++coef[pos];
        MatrixXg cand = MatrixXg::Zero(d, d);
        for (std::size_t i = 0; i < k; ++i)
            if (coef[i] != 0) cand += GaussianRational(coef[i]) * basis[i];
        if (!determinant(cand).is_zero()) return cand;
    }
    return std::nullopt;
}

}  // namespace

bool verify_intertwiner(const SuperModule& m, const SuperModule& n, const MatrixXg& x,
                        const std::vector<std::string>& labels) {
    for (const auto& label : labels)
        if (!mat_eq(x * m.action(label), n.action(label) * x)) return false;
    return true;
}

IntertwinerResult find_intertwiner(const SuperModule& m, const SuperModule& n,
                                   const std::vector<std::string>& labels) {
    if (m.dim() != n.dim()) return {};
    IntertwinerResult out;
    for (int sign : {+1, -1}) {
        MatrixXg space = intertwiner_space(m, n, labels, sign);
        std::vector<MatrixXg> basis;
        for (Eigen::Index c = 0; c < space.cols(); ++c)
            basis.push_back(unvec(space.col(c), n.dim(), m.dim()));
        auto inv = invertible_in_span(basis);
        if (inv && !verify_intertwiner(m, n, *inv, labels))
            throw std::logic_error("find_intertwiner: solver produced a non-intertwiner");
        (sign > 0 ? out.even : out.odd) = inv;
    }
    return out;
}

ModuleType module_type(const SuperModule& m, const std::vector<std::string>& labels) {
    MatrixXg space = intertwiner_space(m, m, labels, -1);
    std::vector<MatrixXg> basis;
    for (Eigen::Index c = 0; c < space.cols(); ++c) basis.push_back(unvec(space.col(c), m.dim(), m.dim()));
    auto inv = invertible_in_span(basis);
    if (!inv) return ModuleType::M;
    MatrixXg sq = *inv * *inv;
    GaussianRational scalar = sq(0, 0);
    if (scalar.is_zero() || !mat_eq(sq, scalar * MatrixXg::Identity(m.dim(), m.dim())))
        throw std::domain_error("module_type: odd intertwiner square is not a nonzero scalar");
    return ModuleType::Q;
}

SuperModule atypical_pair_module(const GaussianRational& r1, const GaussianRational& r2) {
    SuperModule mod;
    mod.grading = VectorXg(2);
    mod.grading << GaussianRational(1), GaussianRational(-1);
    mod.actions[xi_label(1)] = pair_first(r1);
    mod.actions[xi_label(2)] = pair_second(r2);
    std::vector<GaussianRational> s = {r1 * r1, r2 * r2};
    return w_action(std::move(mod), WGenSet::build(2), s);
}

CompositionSeriesN2 composition_series_n2(const GaussianRational& root, int sign_choice) {
    if (sign_choice != 1 && sign_choice != -1)
        throw std::invalid_argument("composition_series_n2: sign must be +1 or -1");
    GaussianRational r1 = root;
    GaussianRational r2 = GaussianRational(sign_choice) * GaussianRational::i() * root;
    std::vector<GaussianRational> s = {r1 * r1, r2 * r2};
    if (!(s[0] + s[1]).is_zero()) throw std::invalid_argument("composition_series_n2: input not atypical");
    // 2-dimensional pair block, valid also at root = 0 (where it is C + Pi C)
    SuperModule mod = atypical_pair_module(r1, r2);

    std::vector<MatrixXg> ops;
    for (const auto& label : w_labels(2)) ops.push_back(mod.action(label));
    ops.push_back(mod.action(u_label(2, 0)));
    VectorXg e0 = VectorXg::Zero(2), e1 = VectorXg::Zero(2);
    e0(0) = GaussianRational(1);
    e1(1) = GaussianRational(1);
    bool inv0 = spin({e0}, ops).dim() == 1;
    bool inv1 = spin({e1}, ops).dim() == 1;
    const MatrixXg& zp = mod.action(u_label(2, 0));

    auto factor = [&](int coord) {
        GammaFactor f;
        f.parity = coord == 0 ? 0 : 1;
        f.t = zp(coord, coord);
        return f;
    };
    CompositionSeriesN2 out;
    if (inv0 && inv1) {
        out.split = true;
        out.factors = {factor(0), factor(1)};
        return out;
    }
    if (!inv0 && !inv1) throw std::logic_error("composition_series_n2: no invariant line");
    int sub = inv0 ? 0 : 1;
    out.factors = {factor(sub), factor(1 - sub)};
    return out;
}

CoreData core(std::span<const GaussianRational> s) {
    std::vector<GaussianRational> vals;
    for (const auto& v : s)
        if (!v.is_zero()) vals.push_back(v);
    // repeated first-match removal of zero-sum pairs
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < vals.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < vals.size() && !changed; ++j)
                if ((vals[i] + vals[j]).is_zero()) {
                    vals.erase(vals.begin() + static_cast<long>(j));
                    vals.erase(vals.begin() + static_cast<long>(i));
                    changed = true;
                }
    }
    std::sort(vals.begin(), vals.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return GaussianRational::cmp(a, b) > 0; });
    return {std::move(vals)};
}

bool central_char_equal(std::span<const GaussianRational> s, std::span<const GaussianRational> s2) {
    bool by_core = core(s) == core(s2);
    int order = 2 * static_cast<int>(std::max(s.size(), s2.size()));
    bool by_power_sums = true;
    for (int k = 0; k <= order; ++k)
        if (odd_power_sum(k, s) != odd_power_sum(k, s2)) {
            by_power_sums = false;
            break;
        }
    bool by_series = char_series(s) == char_series(s2);
    if (by_core != by_power_sums || by_core != by_series)
        throw std::logic_error("central_char_equal: cross-checks disagree");
    return by_core;
}

SuperModule core_representation(std::span<const GaussianRational> s) {
    CoreData c = core(s);
    RootVector roots;
    for (const auto& v : c.values) {
        auto r = exact_sqrt(v);
        if (!r)
            throw std::domain_error("core_representation: core entry " + v.str() +
                                    " has no square root in Q(i); supply roots explicitly");
        roots.roots.push_back(*r);
    }
    SuperModule mod = build_V(roots);
    auto sv = roots.s();
    return w_action(std::move(mod), WGenSet::build(roots.n()), sv);
}

std::vector<GaussianRational> SModuleSpec::lambda() const {
    std::vector<GaussianRational> out;
    for (const auto& r : lambda_roots) out.push_back(r * r);
    return out;
}

void SModuleSpec::validate() const {
    if (r < 0) throw std::invalid_argument("SModuleSpec: negative r");
    for (const auto& v : t)
        if (v.is_zero()) throw std::invalid_argument("SModuleSpec: t entries must be nonzero");
    RootVector lr{lambda_roots};
    if (lr.m() != lr.n()) throw std::invalid_argument("SModuleSpec: lambda must be regular");
    if (!lr.typical()) throw std::invalid_argument("SModuleSpec: lambda must be typical");
}

SuperModule build_S(const SModuleSpec& spec) {
    spec.validate();
    const int n = spec.n(), q = spec.q(), p = spec.p();
    RootVector lroots{spec.lambda_roots};
    SuperModule base = build_V(lroots);
    auto lambda = spec.lambda();
    WGenSet qgens = WGenSet::build(q);
    std::vector<MatrixXg> xi;
    for (int i = 1; i <= q; ++i) xi.push_back(base.action(xi_label(i)));
    const Eigen::Index d = base.dim();

    SuperModule mod;
    mod.grading = base.grading;
    // u_k(d) = sum_{2a+j=k} sigma_a(t) u-_j(d); the formula vanishes for
    // k > n, and the phi recursion below always wants u_2(0)
    const int kmax = std::max(n, 2);
    for (int k = 0; k <= kmax; ++k) {
        for (int dp = 0; dp <= 1; ++dp) {
            MatrixXg acc = MatrixXg::Zero(d, d);
            for (int a = 0; 2 * a <= k && a <= p; ++a) {
                int j = k - 2 * a;
                if (j > q) continue;
                MatrixXg uj = uh_action(qgens.u(j, dp), lambda, xi);
                acc += elementary_symmetric(a, spec.t) * uj;
            }
            mod.actions[u_label(k, dp)] = acc;
        }
    }
    // phi_k = (-1/2)^k ad^k(u_2(0))(u_1(1)); z from the bracket relations
    const MatrixXg u2 = mod.action(u_label(2, 0));
    MatrixXg phik = mod.action(u_label(1, 1));
    GaussianRational half(Rational(-1, 2));
    for (int k = 0; k <= n; ++k) {
        mod.actions[phi_label(k)] = phik;
        phik = half * (u2 * phik - phik * u2);
    }
    for (int k = 0; k < n; ++k) {
        if (k % 2 == 1) {
            mod.actions[z_label(k)] = mod.action(u_label(k + 1, 0));
        } else {
            const MatrixXg& p0 = mod.action(phi_label(0));
            const MatrixXg& pk = mod.action(phi_label(k));
            mod.actions[z_label(k)] = GaussianRational(Rational(1, 2)) * (p0 * pk + pk * p0);
        }
    }
    return mod;
}

std::vector<GaussianRational> trace_vector(const SModuleSpec& spec) {
    SuperModule mod = build_S(spec);
    std::vector<GaussianRational> out;
    for (int k = 0; k <= spec.n(); ++k) {
        const MatrixXg& m = mod.action(u_label(k, 0));
        GaussianRational tr(0);
        for (Eigen::Index i = 0; i < m.rows(); ++i) tr += m(i, i);
        out.push_back(tr);
    }
    return out;
}

bool iso_class_S(const SModuleSpec& a, const SModuleSpec& b) {
    a.validate();
    b.validate();
    if (a.n() != b.n()) return false;
    auto sorted = [](std::vector<GaussianRational> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    bool structural = a.r == b.r && sorted(a.t) == sorted(b.t) && sorted(a.lambda()) == sorted(b.lambda());
    auto la = a.lambda(), lb = b.lambda();
    bool by_traces = (char_series(la) == char_series(lb)) && trace_vector(a) == trace_vector(b) &&
                     a.q() == b.q();
    if (structural != by_traces) throw std::logic_error("iso_class_S: trace cross-check disagrees");
    return structural;
}

}  // namespace wq
