#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyctri/complex.hpp"
#include "cyctri/group.hpp"
#include "cyctri/permutation.hpp"

namespace cyctri {

/// Partial vertex bijection as (source, image) pairs sorted by source.
using VertexMap = std::vector<std::pair<Vertex, Vertex>>;

/// Face-preserving bijections between the supports of two complexes,
/// backtracking with degree/valence pruning. limit = 0 finds all.
std::vector<VertexMap> all_isomorphisms(const SimplicialComplex& a, const SimplicialComplex& b,
                                        std::size_t limit = 0);

/// All face-preserving bijections lk(v1, c1) -> lk(v2, c2).
std::vector<VertexMap> link_bijections(const SimplicialComplex& c1, Vertex v1,
                                       const SimplicialComplex& c2, Vertex v2);

/// Support bijection extended by the identity to a permutation of 0..n-1.
Perm vertex_map_to_perm(const VertexMap& m, int degree);

/// Full automorphism group of the facet set.
PermutationGroup automorphisms(const SimplicialComplex& c);

struct IsoResult {
    std::optional<VertexMap> bijection;
    std::string refutation; // distinguishing invariant or "exhausted search"
    bool isomorphic() const { return bijection.has_value(); }
};

/// A facet-set-preserving bijection if one exists, else a refutation citing
/// a distinguishing invariant (f-vector, edge-link valence multiset) or the
/// exhausted search.
IsoResult is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// All units a mod n for which v -> a*v is an automorphism. Requires the
/// cyclic shift to be an automorphism.
std::vector<int> multipliers(const SimplicialComplex& c);

/// Sorted multiset of edge-link valence vectors, one entry per edge; empty
/// vector entries flag edges whose link degrees leave 3..6.
std::vector<std::vector<int>> valence_multiset(const SimplicialComplex& c);

} // namespace cyctri
