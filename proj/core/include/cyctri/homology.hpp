#pragma once

#include <optional>
#include <vector>

#include "cyctri/complex.hpp"
#include "cyctri/matrix.hpp"

namespace cyctri {

/// Boundary matrix of C_k -> C_{k-1} in the sorted face bases, signs from
/// the increasing vertex order. k = 0 gives the empty 0 x f_0 matrix.
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);

struct HomologyProfile {
    std::vector<long long> betti;            // per dimension 0..dim
    std::vector<std::vector<Int>> torsion;   // invariant factors > 1 per dimension
    long long chi = 0;

    bool torsion_free() const;
};

/// Integral simplicial homology via Smith normal form.
HomologyProfile homology(const SimplicialComplex& c);

/// Coherent facet orientation of a pure complex whose ridges lie in at most
/// two facets: signs such that induced orientations cancel on every interior
/// ridge. nullopt if non-orientable.
std::optional<std::vector<int>> orient(const SimplicialComplex& c);

struct FormClass {
    IntegerMatrix gram;
    std::size_t rank = 0;
    bool even = false;
    long long signature = 0;
};

/// Intersection form of a closed, connected, orientable 4-pseudomanifold
/// with torsion-free H^2: Gram matrix of the cup-product pairing on a basis
/// of H^2, evaluated on the fundamental class (Alexander-Whitney front/back
/// faces in the global vertex order).
FormClass intersection_form(const SimplicialComplex& c);

/// Signature of a symmetric integer matrix (exact, via Descartes' rule on
/// the characteristic polynomial; all roots are real).
long long symmetric_signature(const IntegerMatrix& gram);

/// Pairing data on H_2 for expressing explicit 2-cycles: basis of the free
/// part of H_2 plus the intersection matrix in that basis.
struct H2Pairing {
    IntegerMatrix cycle_basis;        // f_2 x r, columns are 2-cycles
    IntegerMatrix intersection;       // r x r intersection matrix on H_2
};

H2Pairing h2_pairing(const SimplicialComplex& c);

/// Coordinates of a 2-cycle (length f_2 column) in the H_2 basis of `p`,
/// or nullopt if the vector is not a cycle / not expressible.
std::optional<std::vector<Int>> h2_class_of(const SimplicialComplex& c, const H2Pairing& p,
                                            const IntegerMatrix& cycle);

/// 2-cycle supported on an oriented closed surface subcomplex: the faces of
/// `surface` (a pure 2-complex inside c) with coherent signs, as a C_2 vector
/// of c. Throws if the surface is not orientable or not closed.
IntegerMatrix surface_cycle(const SimplicialComplex& c, const SimplicialComplex& surface);

} // namespace cyctri
