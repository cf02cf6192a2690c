#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyctri/complex.hpp"
#include "cyctri/difference_cycle.hpp"

namespace cyctri {

enum class Filter {
    ridge_degree_2,         // every ridge lies in exactly two facets
    edge_link_euler,        // chi(lk(e)) == 2 for every 1-simplex
    vertex_degree_complete, // complete 1-skeleton (no diagonals at all)
    dehn_sommerville,       // both 4-manifold Dehn-Sommerville relations
};

std::string to_string(Filter f);
std::optional<Filter> filter_from_string(const std::string& s);

struct SearchConfig {
    int n = 12;
    int d = 4;
    int orbit_count = 6;
    std::optional<std::pair<Vertex, Vertex>> required_diagonal;
    std::vector<Filter> filters;
    int parallelism = 1;
    /// Restrict the search to this pool instead of all canonical cycles
    /// (used by reference tests); must be canonical and sorted.
    std::optional<std::vector<DifferenceCycle>> pool;
};

struct Candidate {
    std::vector<DifferenceCycle> cycles; // sorted canonical
    SimplicialComplex complex;
    std::map<Filter, bool> filter_trace;
};

/// All canonical difference d-cycles mod n, sorted; no two are rotations of
/// each other.
std::vector<DifferenceCycle> generate_cycle_pool(int n, int d);

/// Depth-first search over strictly increasing canonical cycles, adding full
/// orbits, pruning any branch where a ridge reaches degree 3 or the required
/// diagonal appears as an edge. Leaves are kept iff they pass every
/// configured filter. Output is sorted lexicographically by cycle list and
/// does not depend on the parallelism setting.
std::vector<Candidate> enumerate(const SearchConfig& cfg);

/// Filter evaluation on a finished complex (also used for the trace).
bool evaluate_filter(const SimplicialComplex& c, Filter f);

} // namespace cyctri
