#include "wq/symmetric.hpp"

#include <stdexcept>

namespace wq {

GaussianRational elementary_symmetric(int a, std::span<const GaussianRational> values) {
    if (a < 0) throw std::invalid_argument("elementary_symmetric: negative index");
    int n = static_cast<int>(values.size());
    if (a > n) return GaussianRational(0);
    // sigma-DP: after processing v, e[j] holds sigma_j of the prefix.
    std::vector<GaussianRational> e(static_cast<std::size_t>(a) + 1, GaussianRational(0));
    e[0] = GaussianRational(1);
    for (const auto& v : values)
        for (int j = std::min<int>(a, n); j >= 1; --j) e[j] += v * e[j - 1];
    return e[a];
}

MultiPoly elementary_symmetric_poly(int a, int arity) {
    if (a < 0) throw std::invalid_argument("elementary_symmetric_poly: negative index");
    if (a > arity) return MultiPoly::zero(arity);
    std::vector<MultiPoly> e(static_cast<std::size_t>(a) + 1, MultiPoly::zero(arity));
    e[0] = MultiPoly::one(arity);
    for (int i = 1; i <= arity; ++i) {
        MultiPoly xi = MultiPoly::variable(arity, i);
        for (int j = a; j >= 1; --j) e[j] += xi * e[j - 1];
    }
    return e[a];
}

GaussianRational odd_power_sum(int k, std::span<const GaussianRational> values) {
    GaussianRational acc(0);
    for (const auto& v : values) {
        GaussianRational p = v;
        for (int j = 0; j < 2 * k; ++j) p *= v;
        acc += p;
    }
    return acc;
}

std::vector<GaussianRational> z_values(std::span<const GaussianRational> s, int K) {
    std::vector<GaussianRational> z;
    z.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        GaussianRational acc = elementary_symmetric(2 * k + 1, s);
        for (int i = 1; i <= k; ++i) acc -= elementary_symmetric(2 * i, s) * z[k - i];
        z.push_back(acc);
    }
    return z;
}

std::vector<MultiPoly> z_values_sym(int arity, int K) {
    std::vector<MultiPoly> z;
    z.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        MultiPoly acc = elementary_symmetric_poly(2 * k + 1, arity);
        for (int i = 1; i <= k; ++i) acc -= elementary_symmetric_poly(2 * i, arity) * z[k - i];
        z.push_back(acc);
    }
    return z;
}

RationalSeries char_series(std::span<const GaussianRational> s) {
    int n = static_cast<int>(s.size());
    std::vector<GaussianRational> num, den;
    den.push_back(GaussianRational(1));
    for (int i = 0; 2 * i + 1 <= n; ++i) num.push_back(elementary_symmetric(2 * i + 1, s));
    for (int i = 1; 2 * i <= n; ++i) den.push_back(elementary_symmetric(2 * i, s));
    return RationalSeries(std::move(num), std::move(den));
}

}  // namespace wq
