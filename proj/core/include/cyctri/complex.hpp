#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyctri/fvector.hpp"
#include "cyctri/simplex.hpp"

namespace cyctri {

class DifferenceCycle;

/// Finite simplicial complex over the label universe 0..n-1, stored as the
/// full downward closure with faces per dimension in sorted order. Immutable
/// after construction; concurrent readers are safe.
///
/// The universe may be larger than the support (links keep their original
/// vertex labels, so e.g. lk(0) of a 12-vertex complex lives on a 10-vertex
/// subset of 0..11).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Pure complex from facets of equal dimension. Rejects mixed
    /// dimensions, duplicates and out-of-range vertex ids.
    static SimplicialComplex from_facets(int n, std::vector<Simplex> facets);

    /// General complex from an arbitrary generating set (maximal faces of
    /// mixed dimension allowed); used by link/span.
    static SimplicialComplex from_generators(int n, const std::vector<Simplex>& gens);

    /// Union of the orbits of the given difference cycles.
    static SimplicialComplex from_cycles(const std::vector<DifferenceCycle>& cycles);

    int n() const { return n_; }
    /// Dimension of the largest face; -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }

    const std::vector<Simplex>& faces(int k) const;
    std::size_t face_count(int k) const;
    long long total_faces() const;

    /// Top-dimensional faces. For pure complexes these are the facets.
    const std::vector<Simplex>& top_faces() const { return faces(dim()); }

    bool contains(const Simplex& s) const;
    std::optional<std::size_t> index_of(const Simplex& s) const; // within faces(s.dim())

    bool is_pure() const;
    std::vector<Simplex> maximal_faces() const;

    FVector f_vector() const;

    /// Vertices actually present (the 0-faces).
    std::vector<Vertex> support() const;
    /// Number of neighbors of v in the 1-skeleton.
    int degree(Vertex v) const;

    /// lk(s): faces disjoint from s whose join with s is a face.
    SimplicialComplex link(const Simplex& s) const;

    /// Induced subcomplex on a vertex subset.
    SimplicialComplex span(const std::vector<Vertex>& vs) const;

    /// All 2-subsets of the vertex universe that are not edges.
    std::vector<std::pair<Vertex, Vertex>> diagonals() const;

    /// True iff v -> v + n/2 preserves the facet set and no face contains
    /// an antipodal pair. Requires n even.
    bool is_centrally_symmetric() const;

    /// Whether images[v] defines an automorphism (maps top faces onto top faces).
    bool preserved_by(const std::vector<Vertex>& images) const;

    /// Complex relabeled by v -> images[v].
    SimplicialComplex relabeled(const std::vector<Vertex>& images) const;

    /// Number of top-dimensional faces containing s.
    int top_degree(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<Simplex>> faces_; // faces_[k] sorted ascending
};

/// Canonical vertex shift v -> v+1 mod n as an image table.
std::vector<Vertex> shift_map(int n, int amount = 1);
/// Multiplier map v -> a*v mod n.
std::vector<Vertex> multiplier_map(int n, int a);

/// Decomposes a shift-invariant pure complex into difference-cycle orbits,
/// sorted. Throws if the facet set is not invariant under v -> v+1.
std::vector<DifferenceCycle> cycles_of_complex(const SimplicialComplex& c);

} // namespace cyctri
