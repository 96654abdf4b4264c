#pragma once

#include <span>
#include <vector>

#include "wq/multipoly.hpp"
#include "wq/series.hpp"

namespace wq {

/// sigma_a(values); sigma_0 = 1 and sigma_a = 0 for a > length.
GaussianRational elementary_symmetric(int a, std::span<const GaussianRational> values);

/// sigma_a in x_1..x_arity as a polynomial.
MultiPoly elementary_symmetric_poly(int a, int arity);

/// p_k = sum values_i^(2k+1), the Q-symmetric power sums.
GaussianRational odd_power_sum(int k, std::span<const GaussianRational> values);

/// z_0(s), z_2(s), ..., z_2K(s) by the central-character recursion
/// z_2k = -sum_{i=1..k} sigma_2i z_{2k-2i} + sigma_{2k+1}.
std::vector<GaussianRational> z_values(std::span<const GaussianRational> s, int K);

/// The same recursion run symbolically in x_1..x_arity.
std::vector<MultiPoly> z_values_sym(int arity, int K);

/// chi(u) = (sum sigma_{2i+1} u^-2i-1) / (1 + sum sigma_{2i} u^-2i).
RationalSeries char_series(std::span<const GaussianRational> s);

}  // namespace wq
