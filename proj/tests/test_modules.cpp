#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wq/meataxe.hpp"
#include "wq/suite.hpp"
#include "wq/symmetric.hpp"

using namespace wq;

namespace {

GaussianRational g(long v) { return GaussianRational(v); }
GaussianRational gi() { return GaussianRational::i(); }

SuperModule v_module(const std::vector<GaussianRational>& roots) {
    RootVector rv{roots};
    auto s = rv.s();
    return w_action(build_V(rv), cached_wgens(rv.n()), s);
}

// all removal orders of zero-sum pairs lead to one multiset
void all_core_orders(std::vector<GaussianRational> vals, std::vector<std::vector<GaussianRational>>& results) {
    bool reduced = true;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if ((vals[i] + vals[j]).is_zero()) {
                reduced = false;
                auto next = vals;
                next.erase(next.begin() + static_cast<long>(j));
                next.erase(next.begin() + static_cast<long>(i));
                all_core_orders(next, results);
            }
    if (reduced) {
        std::sort(vals.begin(), vals.end());
        results.push_back(vals);
    }
}

}  // namespace

TEST_CASE("build_V reproduces the displayed n=2 matrices") {
    RootVector roots{{g(1), g(2)}};
    SuperModule m = build_V(roots);
    MatrixXg xi1(2, 2), xi2(2, 2);
    xi1 << g(0), g(1), g(1), g(0);
    xi2 << g(0), g(2) * gi(), -(g(2) * gi()), g(0);
    CHECK(mat_eq(m.action(xi_label(1)), xi1));
    CHECK(mat_eq(m.action(xi_label(2)), xi2));
    auto [d0, d1] = m.graded_dims();
    CHECK(d0 == 1);
    CHECK(d1 == 1);
}

TEST_CASE("build_V edge shapes") {
    RootVector zero{{g(0), g(0), g(0)}};
    SuperModule m0 = build_V(zero);
    CHECK(m0.dim() == 1);
    for (int i = 1; i <= 3; ++i) CHECK(is_zero(m0.action(xi_label(i))));
    RootVector one{{g(1)}};
    SuperModule m1 = build_V(one);
    CHECK(m1.dim() == 2);
    MatrixXg want(2, 2);
    want << g(0), g(1), g(1), g(0);
    CHECK(mat_eq(m1.action(xi_label(1)), want));
}

TEST_CASE("clifford relations for mixed and zero roots") {
    Rng rng(31);
    for (int n = 1; n <= 8; ++n) {
        std::vector<GaussianRational> roots;
        for (int i = 0; i < n; ++i) roots.push_back(i % 3 == 0 ? g(0) : rng.nonzero_gauss());
        RootVector rv{roots};
        SuperModule m = build_V(rv);
        auto s = rv.s();
        const Eigen::Index d = m.dim();
        CHECK(d == (Eigen::Index(1) << ((rv.m() + 1) / 2)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                MatrixXg anti = m.action(xi_label(i + 1)) * m.action(xi_label(j + 1)) +
                                m.action(xi_label(j + 1)) * m.action(xi_label(i + 1));
                MatrixXg expect = MatrixXg::Zero(d, d);
                if (i == j) expect = (g(2) * s[i]) * MatrixXg::Identity(d, d);
                CHECK(mat_eq(anti, expect));
            }
    }
}

TEST_CASE("w_action matches the displayed generator matrices at n=2") {
    GaussianRational r1(3), r2(Rational(1, 2));
    SuperModule m = v_module({r1, r2});
    GaussianRational s1 = r1 * r1, s2 = r2 * r2;
    MatrixXg phi0(2, 2), phi1(2, 2), z0(2, 2), zp(2, 2);
    phi0 << g(0), r1 + r2 * gi(), r1 - r2 * gi(), g(0);
    GaussianRational rr = r1 * r2;
    phi1 << g(0), rr * (r2 - r1 * gi()), rr * (r2 + r1 * gi()), g(0);
    z0 = (s1 + s2) * MatrixXg::Identity(2, 2);
    zp << s1 * s2 + rr * gi(), g(0), g(0), s1 * s2 - rr * gi();
    CHECK(mat_eq(m.action(phi_label(0)), phi0));
    CHECK(mat_eq(m.action(phi_label(1)), phi1));
    CHECK(mat_eq(m.action(z_label(0)), z0));
    CHECK(mat_eq(m.action(u_label(2, 0)), zp));
}

TEST_CASE("module type by parity of m") {
    CHECK(module_type(v_module({g(1), g(2)}), w_labels(2)) == ModuleType::M);
    CHECK(module_type(v_module({g(1)}), w_labels(1)) == ModuleType::Q);
    CHECK(module_type(v_module({g(1), g(2), g(3)}), w_labels(3)) == ModuleType::Q);
}

TEST_CASE("meataxe verdicts") {
    auto simple2 = is_simple(v_module({g(1), g(2)}), w_labels(2));
    CHECK(simple2.verdict == SimpleVerdict::SimpleM);
    auto simple3 = is_simple(v_module({g(1), g(2), g(3)}), w_labels(3));
    CHECK(simple3.verdict == SimpleVerdict::SimpleQ);
    // atypical: s = (4, -4) with sqrt(s2) = i sqrt(s1)
    SuperModule red = atypical_pair_module(g(2), g(2) * gi());
    auto verdict = is_simple(red, w_labels(2));
    CHECK(verdict.verdict == SimpleVerdict::Reducible);
    REQUIRE(verdict.witness.cols() == 1);
    // witness is graded: supported on one homogeneous coordinate here
    CHECK(verdict.witness(0, 0).is_zero());
    // one-dimensional module is SimpleM
    SModuleSpec gamma;
    gamma.t = {g(5)};
    auto gv = is_simple(build_S(gamma), w_labels(2));
    CHECK(gv.verdict == SimpleVerdict::SimpleM);
}

TEST_CASE("composition series of the n=2 atypical module") {
    GaussianRational root(3);
    GaussianRational s = root * root;  // s = 9
    auto series = composition_series_n2(root, +1);
    CHECK(!series.split);
    REQUIRE(series.factors.size() == 2);
    CHECK(series.factors[0] == GammaFactor{1, -(s * s) + s});
    CHECK(series.factors[1] == GammaFactor{0, -(s * s) - s});
    // reversed order: s' = (-9, 9) via root' = 3i
    auto swapped = composition_series_n2(root * gi(), +1);
    CHECK(swapped.factors[0] == GammaFactor{1, -(s * s) - s});
    CHECK(swapped.factors[1] == GammaFactor{0, -(s * s) + s});
    // the other sign choice flips the parities
    auto flipped = composition_series_n2(root, -1);
    CHECK(flipped.factors[0].parity == 0);
    // s = 0 splits with zero scalars
    auto zero = composition_series_n2(g(0), +1);
    CHECK(zero.split);
    CHECK(zero.factors[0].t.is_zero());
    CHECK(zero.factors[1].t.is_zero());
}

TEST_CASE("explicit D intertwines V(s1,s2) with V(s2,s1)") {
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        auto roots = rng.typical_regular_roots(2);
        SuperModule ma = v_module(roots);
        SuperModule mb = v_module({roots[1], roots[0]});
        MatrixXg d(2, 2);
        d << roots[1] + roots[0] * gi(), g(0), g(0), roots[0] + roots[1] * gi();
        CHECK(verify_intertwiner(ma, mb, d, w_labels(2)));
        auto iso = find_intertwiner(ma, mb, w_labels(2));
        CHECK(iso.even.has_value());
    }
}

TEST_CASE("q-type modules admit an odd self-intertwiner") {
    SuperModule m = v_module({g(1), g(2), g(3)});
    auto iso = find_intertwiner(m, m, w_labels(3));
    CHECK(iso.odd.has_value());
    // modules with different z_0 scalars admit no intertwiner
    SuperModule a = v_module({g(1), g(2)});
    SuperModule b = v_module({g(1), g(3)});
    auto none = find_intertwiner(a, b, w_labels(2));
    CHECK(!none.even.has_value());
    CHECK(!none.odd.has_value());
}

TEST_CASE("core computation") {
    std::vector<GaussianRational> s = {g(1), g(0), g(3), g(-1), g(-1)};
    CHECK(core(s).values == std::vector<GaussianRational>{g(3), g(-1)});
    std::vector<GaussianRational> zeros = {g(0), g(0), g(0)};
    CHECK(core(zeros).values.empty());
    std::vector<GaussianRational> one_pair = {g(2), g(-2), g(5)};
    CHECK(core(one_pair).values == std::vector<GaussianRational>{g(5)});
    // removal-order independence, exhaustively on small adversarial inputs
    std::vector<std::vector<GaussianRational>> inputs = {
        {g(1), g(-1), g(1), g(-1), g(1)},
        {g(2), g(-2), g(2), g(0)},
        {g(1), g(-1), g(-1)},
        {g(3), g(-3), g(3), g(-3)},
    };
    for (const auto& in : inputs) {
        std::vector<GaussianRational> filtered;
        for (const auto& v : in)
            if (!v.is_zero()) filtered.push_back(v);
        std::vector<std::vector<GaussianRational>> results;
        all_core_orders(filtered, results);
        auto canon = core(in).values;
        std::sort(canon.begin(), canon.end());
        for (const auto& r : results) CHECK(r == canon);
    }
}

TEST_CASE("central character equality") {
    std::vector<GaussianRational> s = {g(1), g(0), g(3), g(-1), g(-1)};
    std::vector<GaussianRational> c = {g(3), g(-1)};
    CHECK(central_char_equal(s, c));
    std::vector<GaussianRational> padded = {g(3), g(-1), g(7), g(-7)};
    CHECK(central_char_equal(c, padded));
    std::vector<GaussianRational> a = {g(1)}, b = {g(2)};
    CHECK(!central_char_equal(a, b));
}

TEST_CASE("core representation") {
    std::vector<GaussianRational> s = {g(4), g(0), g(9), g(-4), g(4)};
    SuperModule m = core_representation(s);
    CHECK(m.dim() == 2);  // core (9, 4) has length 2
    // a core entry without a square root in Q(i) is rejected with a diagnostic
    std::vector<GaussianRational> bad = {g(1), g(0), g(3), g(-1), g(-1)};
    CHECK_THROWS_AS(core_representation(bad), std::domain_error);
}

TEST_CASE("build_S edge cases and the one-dimensional action table") {
    SModuleSpec spec;
    spec.t = {g(7)};
    SuperModule m = build_S(spec);  // Gamma_7 over W(Q(2))
    CHECK(m.dim() == 1);
    CHECK(is_zero(m.action(phi_label(0))));
    CHECK(is_zero(m.action(phi_label(1))));
    CHECK(is_zero(m.action(z_label(0))));
    CHECK(m.action(u_label(2, 0))(0, 0) == g(7));
    // u_k(0) = sigma_{k/2}(t) for even k <= 2p, else 0; u_k(1) = 0
    SModuleSpec two;
    two.r = 1;
    two.t = {g(2), g(-3)};
    SuperModule m2 = build_S(two);
    for (int k = 0; k <= two.n(); ++k) {
        CHECK(is_zero(m2.action(u_label(k, 1))));
        GaussianRational expect = (k % 2 == 0 && k <= 4) ? elementary_symmetric(k / 2, two.t) : g(0);
        CHECK(m2.action(u_label(k, 0))(0, 0) == expect);
    }
}

TEST_CASE("build_S with p = r = 0 reproduces the direct restriction") {
    Rng rng(41);
    for (int q = 1; q <= 3; ++q) {
        SModuleSpec spec;
        spec.lambda_roots = rng.typical_regular_roots(q);
        SuperModule via_s = build_S(spec);
        SuperModule direct = v_module(spec.lambda_roots);
        for (int k = 0; k < q; ++k) {
            CHECK(mat_eq(via_s.action(phi_label(k)), direct.action(phi_label(k))));
            CHECK(mat_eq(via_s.action(z_label(k)), direct.action(z_label(k))));
        }
        for (int k = 0; k <= q; ++k) {
            CHECK(mat_eq(via_s.action(u_label(k, 0)), direct.action(u_label(k, 0))));
            CHECK(mat_eq(via_s.action(u_label(k, 1)), direct.action(u_label(k, 1))));
        }
    }
}

TEST_CASE("S module simplicity, dimension, and parity self-iso") {
    Rng rng(43);
    for (int t = 0; t < 6; ++t) {
        SModuleSpec spec;
        spec.r = static_cast<int>(rng.integer(0, 1));
        int p = static_cast<int>(rng.integer(0, 2));
        int q = static_cast<int>(rng.integer(0, 3));
        for (int i = 0; i < p; ++i) spec.t.push_back(rng.nonzero_gauss());
        spec.lambda_roots = rng.typical_regular_roots(q);
        SuperModule m = build_S(spec);
        CHECK(m.dim() == (Eigen::Index(1) << ((q + 1) / 2)));
        auto verdict = is_simple(m, w_labels(spec.n()));
        CHECK(verdict.verdict == (q % 2 == 1 ? SimpleVerdict::SimpleQ : SimpleVerdict::SimpleM));
    }
}

TEST_CASE("S module isomorphism classes") {
    SModuleSpec a;
    a.r = 0;
    a.t = {g(2), g(5)};
    a.lambda_roots = {g(1), g(3)};
    SModuleSpec b = a;
    std::reverse(b.t.begin(), b.t.end());
    std::reverse(b.lambda_roots.begin(), b.lambda_roots.end());
    CHECK(iso_class_S(a, b));
    // p differs (compensated by r to keep n equal)
    SModuleSpec c;
    c.r = 2;
    c.t = {g(2)};
    c.lambda_roots = a.lambda_roots;
    CHECK(!iso_class_S(a, c));
    // same shape, different sigma_1(t)
    SModuleSpec d = a;
    d.t = {g(2), g(6)};
    CHECK(!iso_class_S(a, d));
    // invalid specs are rejected
    SModuleSpec bad;
    bad.t = {g(0)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    SModuleSpec bad2;
    bad2.lambda_roots = {g(1), gi()};  // s = (1, -1) is not typical
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("trace vector matches the convolution formula") {
    SModuleSpec spec;
    spec.t = {g(2)};
    spec.lambda_roots = {g(1), g(2)};
    auto tr = trace_vector(spec);
    // tr u_k(0) = sum_{2a+j=k} sigma_a(t) tr_{V(lambda)} u_j(0)
    SuperModule v = v_module(spec.lambda_roots);
    for (int k = 0; k <= spec.n(); ++k) {
        GaussianRational expect(0);
        for (int a2 = 0; 2 * a2 <= k && a2 <= 1; ++a2) {
            int j = k - 2 * a2;
            if (j > 2) continue;
            const MatrixXg& uj = v.action(u_label(j, 0));
            GaussianRational t2(0);
            for (Eigen::Index i = 0; i < uj.rows(); ++i) t2 += uj(i, i);
            expect += elementary_symmetric(a2, spec.t) * t2;
        }
        CHECK(tr[k] == expect);
    }
}
