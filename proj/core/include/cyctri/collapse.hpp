#pragma once

#include <utility>
#include <vector>

#include "cyctri/complex.hpp"

namespace cyctri {

/// One elementary collapse: remove the free face and its unique coface.
using CollapseStep = std::pair<Simplex, Simplex>;

struct CollapseResult {
    bool collapsible = false;          // reduced to a single vertex
    std::vector<CollapseStep> steps;   // greedy sequence actually performed
};

/// Greedy free-face collapsing, always removing the lexicographically least
/// free face. collapsible=false only means the greedy strategy got stuck,
/// not a proof of non-collapsibility.
CollapseResult collapse(const SimplicialComplex& c);

/// Re-runs a collapse sequence, checking every step is a legal elementary
/// collapse and that the end state is a single vertex.
bool replay_collapse(const SimplicialComplex& c, const std::vector<CollapseStep>& steps);

} // namespace cyctri
