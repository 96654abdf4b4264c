#include "wq/meataxe.hpp"

#include <algorithm>

namespace wq {

namespace {

VectorXg vec_of(const MatrixXg& m) {
    VectorXg v(m.rows() * m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
    return v;
}

MatrixXg mat_of(const VectorXg& v, Eigen::Index d) {
    MatrixXg m(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) m(i, j) = v(j * d + i);
    return m;
}

struct AlgebraBasis {
    std::vector<MatrixXg> mats;   // parity-homogeneous spanning set, reduced
    std::vector<int> parities;
};

// Unital span closure of the algebra generated by parity-homogeneous
// matrices. Reduction stays within each parity class so basis elements remain
// homogeneous.
AlgebraBasis algebra_closure(const std::vector<std::pair<MatrixXg, int>>& gens, Eigen::Index d) {
    AlgebraBasis out;
    EchelonBasis even(d * d), odd(d * d);
    std::vector<std::pair<MatrixXg, int>> queue;
    auto insert = [&](const MatrixXg& m, int parity) {
        EchelonBasis& eb = parity == 0 ? even : odd;
        VectorXg v = vec_of(m);
        VectorXg red = eb.reduce(v);
        if (!eb.add(v)) return false;
        MatrixXg rm = mat_of(red, d);
        out.mats.push_back(rm);
        out.parities.push_back(parity);
        queue.emplace_back(std::move(rm), parity);
        return true;
    };
    insert(MatrixXg::Identity(d, d), 0);
    for (const auto& [g, p] : gens) insert(g, p);
    std::size_t head = 0;
    while (head < queue.size()) {
        auto [m, p] = queue[head++];
        for (const auto& [g, gp] : gens) insert(g * m, (p + gp) % 2);
    }
    return out;
}

// Nonzero columns of J * Id assembled from radical basis elements; the span
// J.M is a graded invariant subspace.
MatrixXg column_space(const std::vector<MatrixXg>& mats, Eigen::Index d) {
    EchelonBasis basis(d);
    for (const auto& m : mats)
        for (Eigen::Index c = 0; c < m.cols(); ++c) basis.add(m.col(c));
    return basis.matrix();
}

}  // namespace

SimplicityResult is_simple(const SuperModule& mod, const std::vector<std::string>& labels) {
    const Eigen::Index d = mod.dim();
    if (d == 0) throw std::invalid_argument("is_simple: empty module");
    if (labels.empty()) throw std::invalid_argument("is_simple: no action labels");

    std::vector<std::pair<MatrixXg, int>> gens;
    for (const auto& label : labels) gens.emplace_back(mod.action(label), mod.action_parity(label));
    gens.emplace_back(mod.grading_matrix(), 0);  // graded submodule = submodule over <gens, eps>

    std::vector<MatrixXg> ops, ops_t;
    for (const auto& [g, p] : gens) {
        ops.push_back(g);
        ops_t.push_back(g.transpose());
    }

    // Quick spins of the standard homogeneous basis vectors.
    for (Eigen::Index k = 0; k < d; ++k) {
        VectorXg e = VectorXg::Zero(d);
        e(k) = GaussianRational(1);
        EchelonBasis sp = spin({e}, ops);
        if (sp.dim() < d) return {SimpleVerdict::Reducible, sp.matrix(), "spin"};
    }

    AlgebraBasis alg = algebra_closure(gens, d);
    const Eigen::Index adim = static_cast<Eigen::Index>(alg.mats.size());

    auto classify = [&](const std::string& cert) -> SimplicityResult {
        // Q-type iff an odd invertible self-intertwiner exists over the
        // original label set (without the grading involution).
        return {module_type(mod, labels) == ModuleType::Q ? SimpleVerdict::SimpleQ : SimpleVerdict::SimpleM,
                {}, cert};
    };

    if (adim == d * d) return classify("density");

    // Norton certificate on nullity-1 even singular elements: if the null
    // vector spins to the whole module and the transposed null vector spins to
    // the whole dual, no proper submodule exists.
    for (std::size_t k = 0; k < alg.mats.size(); ++k) {
        if (alg.parities[k] != 0) continue;
        const MatrixXg& a = alg.mats[k];
        MatrixXg ns = nullspace(a);
        if (ns.cols() == 0) continue;
        bool reducible_found = false;
        for (Eigen::Index c = 0; c < ns.cols(); ++c) {
            EchelonBasis sp = spin({VectorXg(ns.col(c))}, ops);
            if (sp.dim() < d) return {SimpleVerdict::Reducible, sp.matrix(), "spin"};
        }
        if (ns.cols() == 1) {
            MatrixXg nst = nullspace(MatrixXg(a.transpose()));
            if (nst.cols() == 1) {
                EchelonBasis sp = spin({VectorXg(nst.col(0))}, ops_t);
                if (sp.dim() == d && !reducible_found) return classify("norton");
            }
        }
    }

    // Radical of the enveloping algebra by the trace form (exact in
    // characteristic zero). A nonzero radical gives the witness J.M.
    {
        MatrixXg tr_form(adim, adim);
        for (Eigen::Index i = 0; i < adim; ++i)
            for (Eigen::Index j = 0; j < adim; ++j) {
                MatrixXg prod = alg.mats[i] * alg.mats[j];
                GaussianRational t(0);
                for (Eigen::Index k = 0; k < d; ++k) t += prod(k, k);
                tr_form(i, j) = t;
            }
        MatrixXg rad_coords = nullspace(tr_form);
        if (rad_coords.cols() > 0) {
            std::vector<MatrixXg> rad;
            for (Eigen::Index c = 0; c < rad_coords.cols(); ++c) {
                MatrixXg j = MatrixXg::Zero(d, d);
                for (Eigen::Index i = 0; i < adim; ++i) j += rad_coords(i, c) * alg.mats[i];
                rad.push_back(std::move(j));
            }
            MatrixXg witness = column_space(rad, d);
            if (witness.cols() == 0 || witness.cols() == d)
                throw std::logic_error("is_simple: degenerate radical image");
            return {SimpleVerdict::Reducible, witness, "radical"};
        }
    }

    // Semisimple case: the module is simple iff the commutant is the scalars.
    MatrixXg sys(static_cast<Eigen::Index>(ops.size()) * d * d, d * d);
    Eigen::Index row0 = 0;
    for (const auto& g : ops) {
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j) {
                Eigen::Index row = row0 + j * d + i;
                for (Eigen::Index k = 0; k < d * d; ++k) sys(row, k) = GaussianRational(0);
                // (X g - g X)(i, j) = 0
                for (Eigen::Index jj = 0; jj < d; ++jj) sys(row, jj * d + i) += g(jj, j);
                for (Eigen::Index ii = 0; ii < d; ++ii) sys(row, j * d + ii) -= g(i, ii);
            }
        row0 += d * d;
    }
    MatrixXg comm = nullspace(sys);
    if (comm.cols() == 1) return classify("commutant");

    // Commutant is bigger than the scalars: the module decomposes, and a
    // kernel of (c - lambda) for an eigenvalue of a non-scalar intertwiner is
    // an invariant subspace. Eigenvalues outside Q(i) cannot be represented.
    for (Eigen::Index c = 0; c < comm.cols(); ++c) {
        MatrixXg x = mat_of(comm.col(c), d);
        GaussianRational diag = x(0, 0);
        bool scalar = mat_eq(x, diag * MatrixXg::Identity(d, d));
        if (scalar) continue;
        std::vector<GaussianRational> hints;
        for (Eigen::Index k = 0; k < d; ++k) hints.push_back(x(k, k));
        for (const auto& lambda : poly_roots(char_poly(x), hints)) {
            MatrixXg shifted = x - lambda * MatrixXg::Identity(d, d);
            MatrixXg ker = nullspace(shifted);
            if (ker.cols() > 0 && ker.cols() < d) return {SimpleVerdict::Reducible, ker, "commutant"};
        }
    }
    throw std::domain_error("is_simple: module is semisimple with a commutant that does not split over Q(i)");
}

}  // namespace wq
