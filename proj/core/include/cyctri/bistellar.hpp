#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyctri/complex.hpp"

namespace cyctri {

/// Bistellar move on a 3-dimensional complex, identified by the face it
/// removes the star of:
///   kind 1 (2->3): pivot is a triangle in exactly two tetrahedra
///   kind 2 (3->2): pivot is an edge in exactly three tetrahedra
///   kind 3 (4->1): pivot is a vertex in exactly four tetrahedra
struct BistellarMove {
    int kind = 0;
    Simplex pivot;
};

/// Tetrahedron set under bistellar moves. Only checks and applies legal
/// moves; the PL type is invariant, so a sequence reaching the boundary of
/// the 4-simplex certifies a 3-sphere.
class BistellarState {
public:
    explicit BistellarState(const SimplicialComplex& c); // pure 3-dim
    static bool is_valid_input(const SimplicialComplex& c);

    bool legal(const BistellarMove& m) const;
    bool apply(const BistellarMove& m); // false if illegal

    std::size_t tet_count() const { return tets_.size(); }
    /// Boundary of the 4-simplex: 5 vertices, all five tetrahedra present.
    bool is_boundary_of_4_simplex() const;

    std::vector<BistellarMove> legal_moves() const;
    SimplicialComplex to_complex() const;

private:
    int n_ = 0;
    std::vector<Simplex> tets_; // sorted
    std::vector<Simplex> cofaces(const Simplex& s) const;
};

struct BistellarOutcome {
    bool reduced = false;                // reached the boundary of the 4-simplex
    std::vector<BistellarMove> moves;
    int flips_used = 0;
};

/// Heuristic reduction: prefer strictly shrinking moves (4->1, then 3->2),
/// walk through 2->3 moves on plateaus; fixed-seed generator, bounded
/// restarts. Never reports a reduction that did not happen.
BistellarOutcome bistellar_reduce(const SimplicialComplex& c, int budget, std::uint32_t seed);

/// Re-applies a recorded move sequence, validating each step; true iff the
/// final state is the boundary of the 4-simplex.
bool replay_bistellar(const SimplicialComplex& c, const std::vector<BistellarMove>& moves);

} // namespace cyctri
