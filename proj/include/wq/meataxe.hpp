#pragma once

#include <string>
#include <vector>

#include "wq/supermodule.hpp"

namespace wq {

enum class SimpleVerdict { SimpleM, SimpleQ, Reducible };

struct SimplicityResult {
    SimpleVerdict verdict = SimpleVerdict::Reducible;
    /// Basis (columns) of a proper nonzero graded invariant subspace when
    /// reducible; empty otherwise.
    MatrixXg witness;
    /// How the verdict was certified, for reports: "density", "norton",
    /// "commutant", "radical", "spin".
    std::string certificate;
};

/// Exact graded Meataxe. A graded submodule is an ordinary submodule over the
/// algebra enlarged by the grading involution, so the module is analyzed over
/// that algebra: span closure, quick spins of homogeneous null vectors, a
/// Norton transpose-spin certificate on nullity-1 even elements, then the
/// exact radical (trace form) and commutant decision. Verdicts are exact;
/// inputs whose splitting needs an extension of Q(i) raise an exception.
SimplicityResult is_simple(const SuperModule& m, const std::vector<std::string>& labels);

}  // namespace wq
