#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wq/suite.hpp"
#include "wq/uh.hpp"

using namespace wq;

namespace {

GaussianRational g(long v) { return GaussianRational(v); }

// Step-by-step oracle: multiply by one generator at a time, moving it left
// through the ordered monomial with a sign per transposition.
UhElement oracle_mul_xi(const UhElement& a, int idx) {
    UhElement out(a.arity());
    for (const auto& [mask, p] : a.terms()) {
        std::uint32_t bit = 1u << (idx - 1);
        int above = 0;
        for (int k = idx; k < a.arity(); ++k)
            if (mask >> k & 1u) ++above;
        int sign = above % 2 == 0 ? 1 : -1;
        if (mask & bit) {
            MultiPoly q = p * MultiPoly::variable(a.arity(), idx);
            out.add_term(mask & ~bit, sign < 0 ? -q : q);
        } else {
            out.add_term(mask | bit, sign < 0 ? -p : p);
        }
    }
    return out;
}

UhElement oracle_mul(const UhElement& a, const UhElement& b) {
    UhElement out(a.arity());
    for (const auto& [mask, p] : b.terms()) {
        UhElement acc(a.arity());
        for (const auto& [am, ap] : a.terms()) acc.add_term(am, ap * p);
        for (int k = 0; k < b.arity(); ++k)
            if (mask >> k & 1u) acc = oracle_mul_xi(acc, k + 1);
        out += acc;
    }
    return out;
}

}  // namespace

TEST_CASE("defining relations") {
    UhElement xi1 = UhElement::xi(2, 1), xi2 = UhElement::xi(2, 2);
    CHECK(xi1 * xi1 == UhElement::x(2, 1));
    CHECK(xi2 * xi1 == -(xi1 * xi2));
    UhElement sum = xi1 + xi2;
    CHECK(sum * sum == UhElement::x(2, 1) + UhElement::x(2, 2));
}

TEST_CASE("multiplication agrees with the stepwise oracle") {
    Rng rng(17);
    for (int t = 0; t < 120; ++t) {
        int n = static_cast<int>(rng.integer(1, 5));
        UhElement a = rng.uh(n, 2, 3), b = rng.uh(n, 2, 3);
        CHECK(a * b == oracle_mul(a, b));
    }
}

TEST_CASE("super commutator") {
    UhElement xi1 = UhElement::xi(2, 1), xi2 = UhElement::xi(2, 2);
    CHECK(super_commutator(xi1, xi1) == g(2) * UhElement::x(2, 1));
    CHECK(super_commutator(xi1, xi2).is_zero());
    UhElement phi0 = xi1 + xi2;
    CHECK(super_commutator(phi0, phi0) == g(2) * (UhElement::x(2, 1) + UhElement::x(2, 2)));
}

TEST_CASE("parity split") {
    UhElement xi1 = UhElement::xi(2, 1), xi2 = UhElement::xi(2, 2);
    UhElement x1 = UhElement::x(2, 1), x2 = UhElement::x(2, 2);
    auto [e1, o1] = (x1 + xi1).parity_split();
    CHECK(e1 == x1);
    CHECK(o1 == xi1);
    UhElement prod = (x1 - xi1) * (x2 + xi2);
    auto [even, odd] = prod.parity_split();
    CHECK(even == x1 * x2 - xi1 * xi2);
    CHECK(odd == x1 * xi2 - x2 * xi1);
    auto [e2, o2] = (xi1 * xi2).parity_split();
    CHECK(e2 == xi1 * xi2);
    CHECK(o2.is_zero());
}

TEST_CASE("top term by grading degree") {
    UhElement xi1 = UhElement::xi(2, 1);
    UhElement x1 = UhElement::x(2, 1), x2 = UhElement::x(2, 2);
    CHECK((x1 + xi1).top_term() == x1);
    UhElement z1 = x1 * x2 - UhElement::xi(2, 1) * UhElement::xi(2, 2);
    CHECK(z1.top_term() == x1 * x2);
    CHECK(z1.grading_degree() == 4);
    UhElement hom = x1 * x2;
    CHECK(hom.top_term() == hom);
    CHECK_THROWS(UhElement::zero(2).top_term());
}

TEST_CASE("substitution") {
    UhElement el = UhElement::x(2, 1) * UhElement::xi(2, 2);
    std::vector<GaussianRational> s = {g(3), g(5)};
    CHECK(el.substitute_x(s) == g(3) * UhElement::xi(2, 2));
    UhElement z1 = UhElement::x(2, 1) * UhElement::x(2, 2) - UhElement::xi(2, 1) * UhElement::xi(2, 2);
    CHECK(z1.substitute_x(s) ==
          UhElement::from_poly(MultiPoly::constant(2, g(15))) - UhElement::xi(2, 1) * UhElement::xi(2, 2));
    UhElement c = UhElement::from_poly(MultiPoly::constant(2, g(7)));
    CHECK(c.substitute_x(s) == c);
    Rng rng(19);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.integer(1, 4));
        UhElement a = rng.uh(n, 2, 3), b = rng.uh(n, 2, 3);
        auto pt = rng.scalars(n);
        CHECK((a * b).substitute_x(pt) == (a.substitute_x(pt) * b.substitute_x(pt)).substitute_x(pt));
    }
}

TEST_CASE("split embedding definition") {
    UhElement xi1 = UhElement::xi(2, 1);
    TensorElement t1 = split_embed(xi1, 1, 1);
    CHECK(t1 == TensorElement::left(UhElement::xi(1, 1), 1));
    TensorElement t12 = split_embed(UhElement::xi(2, 1) * UhElement::xi(2, 2), 1, 1);
    CHECK(t12 == TensorElement::tensor(UhElement::xi(1, 1), UhElement::xi(1, 1)));
}

TEST_CASE("split embedding is an algebra map") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rng.integer(2, 5));
        int n1 = static_cast<int>(rng.integer(1, n - 1));
        UhElement a = rng.uh(n, 2, 3), b = rng.uh(n, 2, 3);
        CHECK(split_embed(a * b, n1, n - n1) == split_embed(a, n1, n - n1) * split_embed(b, n1, n - n1));
    }
}

TEST_CASE("koszul sign in the tensor product") {
    UhElement xi = UhElement::xi(1, 1);
    TensorElement right = TensorElement::right(1, xi);  // 1 (x) xi
    TensorElement left = TensorElement::left(xi, 1);    // xi (x) 1
    TensorElement prod = right * left;                  // (1 x xi)(xi x 1) = -(xi x xi)
    TensorElement expect = TensorElement::tensor(xi, xi);
    expect.scale(g(-1));
    CHECK(prod == expect);
    CHECK(left * right == TensorElement::tensor(xi, xi));
}

TEST_CASE("flip conventions") {
    UhElement xi = UhElement::xi(1, 1);
    UhElement x = UhElement::x(1, 1);
    TensorElement xx = TensorElement::tensor(xi, xi);
    TensorElement plain = xx.flip(false);
    TensorElement koszul = xx.flip(true);
    CHECK(plain == xx);
    TensorElement minus = xx;
    minus.scale(g(-1));
    CHECK(koszul == minus);
    // mixed parities carry no sign either way
    TensorElement xxi = TensorElement::tensor(x, xi);
    CHECK(xxi.flip(false) == xxi.flip(true));
}

TEST_CASE("arity errors") {
    CHECK_THROWS(UhElement::xi(2, 1) * UhElement::xi(3, 1));
    CHECK_THROWS(split_embed(UhElement::xi(2, 1), 1, 2));
    std::vector<GaussianRational> bad = {g(1)};
    CHECK_THROWS(UhElement::xi(2, 1).substitute_x(bad));
}
