#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wq/meataxe.hpp"
#include "wq/series.hpp"
#include "wq/supermodule.hpp"
#include "wq/uh.hpp"

namespace wq {

/// Yangian generator T^{(m)}_{i,j} with i, j = +/-1; parity p(i)+p(j) with
/// p(1) = 0, p(-1) = 1. T^{(0)}_{i,j} = delta_{ij}.
struct YGen {
    int i = 1;
    int j = 1;
    int m = 0;

    int parity() const { return ((i < 0 ? 1 : 0) + (j < 0 ? 1 : 0)) % 2; }
    friend auto operator<=>(const YGen&, const YGen&) = default;
};

/// Image under phi_n inside U(h): (1,1,m) -> (-1)^m u_m(0),
/// (-1,1,m) -> (-1)^m u_m(1), the other index pairs through
/// T^{(m)}_{-i,-j} = (-1)^m T^{(m)}_{i,j}; zero for m > n.
UhElement phi_image(const YGen& g, int n);

/// eta_i = (-1/2)^i ad^i T^{(2)}_{1,1} (T^{(1)}_{1,-1}) evaluated in U(h).
UhElement eta_elem(int i, int n);

/// Z_{2i} = [eta_0, eta_{2i}] / 2 evaluated in U(h).
UhElement z_central_elem(int two_i, int n);

/// Defining relation of YQ(1) on phi_n images for one index instance.
bool check_rtt(int n, int m, int r, int i, int j, int k, int l);

/// Three-term commutator recursion (and its i = 0, 1 base cases).
bool check_threeterms(int n, int k, int i);

/// [T^{(2)}_{1,1}, T^{(2k)}_{1,1}] = 0 on images.
bool check_tt_commute(int n, int k);

/// [T^{(2)}_{1,1}, T^{(2k+1)}_{1,-1}] = 2 T^{(2k+2)}_{1,-1} on images.
bool check_ind1(int n, int k);

/// [T^{(2)}_{1,1}, T^{(2k)}_{1,-1}] = 2T^{(2k+1)}_{1,-1} + 2T^{(2k)}_{1,-1}
///   - 2T^{(2k)}_{1,1}T^{(1)}_{1,-1} on images.
bool check_ind2(int n, int k);

/// (phi_m (x) phi_n) applied to the comultiplication of a generator.
TensorElement coproduct_image(const YGen& g, int m, int n);

struct DiagramReport {
    bool commutes = false;
    bool plain_ok = true;
    bool koszul_ok = true;
    std::string convention;  // "koszul", "plain", or "both" (tiny instances)
    std::string witness;     // first generator failing under both conventions
};

/// Compares phi_{m+n} followed by the splitting W^{m+n} -> W^n (x) W^m and
/// the flip against the coproduct route, for generators (1,1,k) and (-1,1,k),
/// k <= K. Both flip conventions are evaluated; exactly one must commute.
DiagramReport check_diagram(int m, int n, int K);

using GammaF = EvenSeries;

/// Action of the one-dimensional module Gamma_f on a generator.
GaussianRational gamma_action(const GammaF& f, const YGen& g);

/// Truncated YQ(1)-module: actions of all T^{(m)}_{i,j} with m <= order.
struct YModule {
    VectorXg grading;
    int order = 0;
    std::map<std::tuple<int, int, int>, MatrixXg> act;

    Eigen::Index dim() const { return grading.size(); }
    const MatrixXg& action(const YGen& g) const;
    MatrixXg grading_matrix() const;
    friend bool operator==(const YModule& a, const YModule& b);
};

/// Lift of a W-module carrying u_k(d) actions through phi_n.
YModule lift_from_w(const SuperModule& m, int n, int order);

/// Gamma_f as a (1|0)-dimensional module.
YModule gamma_module(const GammaF& f, int order);

/// M (x) Gamma_f: T^{(r)} acts by sum_{s+2l=r} T^{(s)}-action * f_{2l}.
YModule twist(const YModule& m, const GammaF& f);

struct WeightSpace {
    EvenSeries theta;  // theta_k = generalized eigenvalue of T^{(2k)}_{1,1}
    MatrixXg basis;    // columns
};

struct WeightDecomposition {
    std::vector<WeightSpace> spaces;  // sorted by theta
    std::vector<EvenSeries> weights() const;
};

/// Simultaneous generalized eigenspace decomposition for the commuting
/// T^{(2k)}_{1,1}; throws if they fail to commute or an eigenvalue lies
/// outside Q(i).
WeightDecomposition weight_decomposition(const YModule& m);

/// S(t, lambda) with r = 0 against V(lambda) (x) Gamma_f,
/// f = prod (1 + t_i u^-2): all generator actions must agree exactly.
bool compare_S_with_twist(const SModuleSpec& spec);

/// eta_i action matrices derived from the module's T actions, i = 0..imax.
std::vector<MatrixXg> eta_matrices(const YModule& m, int imax);

/// Span closure of {eta_0, T^{(2i)}_{1,1}} equals the span closure of all
/// W-generator actions (the generation statement, checked on one module).
bool check_generation(const SuperModule& wmod, int n);

struct Recurrence {
    std::vector<GaussianRational> c;  // chi_{2m} = -sum c_i chi_{2m-2i}
    int onset = 0;                    // first m where the fit is enforced
};

/// Minimal-order linear recurrence fitted exactly; nullopt if none of order
/// <= floor(len/2) - 1 fits.
std::optional<Recurrence> find_recurrence(std::span<const GaussianRational> values);

struct ChiInverseResult {
    int n = 0;
    UniPoly monic;  // ascending coefficients of P(T) = sum (-1)^j sigma_j T^{n-j}
};

/// Smallest n and monic P whose root multisets realize the character with
/// odd coefficients a and even coefficients c.
ChiInverseResult chi_inverse(std::span<const GaussianRational> a, std::span<const GaussianRational> c);

}  // namespace wq
