#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wq/linalg.hpp"
#include "wq/series.hpp"
#include "wq/uh.hpp"
#include "wq/wgen.hpp"

namespace wq {

/// Z2-graded exact matrix representation. The grading involution is diagonal
/// in the chosen basis; even-labeled actions commute with it, odd-labeled
/// actions anticommute.
struct SuperModule {
    VectorXg grading;  // diagonal entries, each +1 or -1
    std::map<std::string, MatrixXg> actions;

    Eigen::Index dim() const { return grading.size(); }
    std::pair<Eigen::Index, Eigen::Index> graded_dims() const;
    MatrixXg grading_matrix() const;

    const MatrixXg& action(const std::string& label) const;
    bool has_action(const std::string& label) const { return actions.count(label) != 0; }

    /// 0 if the matrix commutes with the grading, 1 if it anticommutes.
    int action_parity(const std::string& label) const;

    std::vector<std::string> labels() const;
};

std::string xi_label(int i);
std::string phi_label(int k);
std::string z_label(int k);
std::string u_label(int k, int d);

/// All W-generator labels present in a module for a given n.
std::vector<std::string> w_labels(int n);

/// Square roots r_1..r_n defining s_i = r_i^2; the sign choices control the
/// parity conventions of V(s).
struct RootVector {
    std::vector<GaussianRational> roots;

    int n() const { return static_cast<int>(roots.size()); }
    std::vector<GaussianRational> s() const;
    int m() const;  // number of nonzero coordinates
    bool regular() const;
    bool typical() const;
};

/// Clifford module V(s): nonzero generators act through 2x2 blocks combined
/// by a graded (Jordan-Wigner) Kronecker product; zero-root generators act as
/// zero. dim = 2^ceil(m/2).
SuperModule build_V(const RootVector& roots);

/// Products of xi-action matrices for every generator subset, indexed by
/// bitmask (ascending generator order inside each product).
std::vector<MatrixXg> xi_mask_table(const std::vector<MatrixXg>& xi_actions, Eigen::Index dim);

/// Matrix of a U(h) element on a module carrying xi-actions, with x -> s.
MatrixXg uh_action(const UhElement& el, std::span<const GaussianRational> s,
                   const std::vector<MatrixXg>& xi_actions);
MatrixXg uh_action(const UhElement& el, std::span<const GaussianRational> s,
                   const std::vector<MatrixXg>& xi_actions, const std::vector<MatrixXg>& mask_table);

/// The 2-dimensional pair block with roots (r1, r2): the n = 2 Clifford
/// module in the basis of the displayed matrices (valid also at r1 = r2 = 0).
SuperModule atypical_pair_module(const GaussianRational& r1, const GaussianRational& r2);

/// Restriction of V(s) to W: adds action matrices for every phi_k, z_k and
/// u_k(d) of the generator set. Verifies the Clifford relations first.
SuperModule w_action(SuperModule m, const WGenSet& gens, std::span<const GaussianRational> s);

struct IntertwinerResult {
    std::optional<MatrixXg> even;
    std::optional<MatrixXg> odd;
};

/// Invertible homogeneous X with X a_M(g) = a_N(g) X for all labels; even and
/// odd searched separately.
IntertwinerResult find_intertwiner(const SuperModule& m, const SuperModule& n,
                                   const std::vector<std::string>& labels);

/// Checks a proposed intertwiner by substitution on all labels.
bool verify_intertwiner(const SuperModule& m, const SuperModule& n, const MatrixXg& x,
                        const std::vector<std::string>& labels);

enum class ModuleType { M, Q };

/// Q-type iff an odd invertible self-intertwiner with scalar square exists.
ModuleType module_type(const SuperModule& m, const std::vector<std::string>& labels);

/// One composition factor of an n = 2 module: a one-dimensional Gamma_t with
/// a parity.
struct GammaFactor {
    int parity = 0;            // 0 = Gamma_t, 1 = Pi Gamma_t
    GaussianRational t;        // the z'_1 = u_2(0) scalar
    friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

struct CompositionSeriesN2 {
    bool split = false;
    std::vector<GammaFactor> factors;  // sub first, then quotient
};

/// Composition series of the n = 2 atypical module with s = (s, -s), roots
/// chosen as sqrt(s1) = root and sqrt(s2) = sign * i * root.
CompositionSeriesN2 composition_series_n2(const GaussianRational& root, int sign_choice);

/// Multiset of nonzero values with no pair summing to zero, canonically
/// sorted (descending in the (re, im) order).
struct CoreData {
    std::vector<GaussianRational> values;
    int length() const { return static_cast<int>(values.size()); }
    friend bool operator==(const CoreData&, const CoreData&) = default;
};

CoreData core(std::span<const GaussianRational> s);

/// Core equality, cross-checked against odd power sums to order 2n and
/// rational equality of the character series.
bool central_char_equal(std::span<const GaussianRational> s, std::span<const GaussianRational> s2);

/// V(c(s)) with canonical square roots extracted in Q(i); throws when a core
/// entry has no square root in Q(i).
SuperModule core_representation(std::span<const GaussianRational> s);

/// Data of S(t, lambda) = C (x) Gamma_t1 (x) ... (x) Gamma_tp (x) V(lambda).
struct SModuleSpec {
    int r = 0;
    std::vector<GaussianRational> t;             // p nonzero scalars
    std::vector<GaussianRational> lambda_roots;  // q roots; values typical regular

    int p() const { return static_cast<int>(t.size()); }
    int q() const { return static_cast<int>(lambda_roots.size()); }
    int n() const { return r + 2 * p() + q(); }
    std::vector<GaussianRational> lambda() const;
    void validate() const;
};

/// Simple module S(t, lambda) realized on V(lambda): u_k(d) actions by the
/// sigma(t) convolution of the arity-q generators, phi/z derived from them.
SuperModule build_S(const SModuleSpec& spec);

/// Iso classes by multisets (r, t, lambda); cross-checked by the character
/// series of lambda and the trace vector of the u_k(0).
bool iso_class_S(const SModuleSpec& a, const SModuleSpec& b);

/// tr u_k(0) for k = 0..n on build_S(spec).
std::vector<GaussianRational> trace_vector(const SModuleSpec& spec);

}  // namespace wq
