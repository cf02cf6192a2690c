#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyctri/certify.hpp"
#include "cyctri/complex.hpp"
#include "cyctri/difference_cycle.hpp"
#include "cyctri/surface.hpp"

namespace cyctri {

enum class Trivalent { yes, no, unknown };
std::string to_string(Trivalent t);

struct PseudomanifoldCheck {
    bool closed = false;             // every ridge in exactly 2 facets
    bool strongly_connected = false; // facet graph on shared ridges connected
    std::vector<Simplex> bad_ridges; // ridges of degree != 2
};

/// Ridge-degree and facet-connectivity check for a pure complex.
PseudomanifoldCheck check_pseudomanifold(const SimplicialComplex& c);

struct LinkVerdict {
    Simplex face;            // orbit representative
    int orbit_size = 1;
    SphereCertificate cert;  // certificate for lk(face)
};

enum class VertexLinkStrategy {
    automatic,         // manifold pre-check, homology refutation, bistellar
    ball_union_search, // search vertex partitions with collapsible spans
    bistellar_only,
};

struct VerifyOptions {
    bool use_transitivity = true; // check one representative per C_n-orbit
    VertexLinkStrategy strategy = VertexLinkStrategy::automatic;
    int budget = 5000;            // bistellar flip budget per vertex link
    std::uint32_t seed = 0;
    int jobs = 1;
};

struct VerificationReport {
    int dim = 0;
    FVector fvec;
    PseudomanifoldCheck pseudo;
    bool used_transitivity = false;
    std::vector<LinkVerdict> link_verdicts; // dims 2, 1, 0 (links: circles, 2-, 3-spheres)
    std::vector<Simplex> singular_faces;    // faces with refuted links (orbits expanded)
    bool eulerian = false;
    Trivalent is_manifold = Trivalent::unknown;
};

/// Combinatorial-manifold certification of a pure 4-complex: ridge degrees,
/// then link spheres per dimension. With use_transitivity (requires the
/// cyclic shift to be an automorphism) only orbit representatives are
/// checked and the shortcut is recorded in the report.
VerificationReport verify_manifold(const SimplicialComplex& c, const VerifyOptions& opts = {});

/// Eulerian condition: chi(lk(F)) == 1 - (-1)^(dim - k) for every k-face F.
bool eulerian_check(const SimplicialComplex& c);

struct SingularSurface {
    std::vector<Simplex> triangles;  // sorted 2-faces of the component
    std::vector<Simplex> generators; // orbit representatives (shift-invariant case)
    SurfaceClass cls;
};

struct SingularLocus {
    std::vector<Simplex> faces;             // every face with a refuted link
    std::vector<SingularSurface> surfaces;  // decomposition of the singular 2-faces
};

/// All faces whose link certificate is not_sphere; the singular 2-faces are
/// split into minimal closed sub-surfaces (every edge covered exactly twice
/// inside a piece) and classified.
SingularLocus singular_locus(const SimplicialComplex& c, int budget = 5000,
                             std::uint32_t seed = 0);

/// Valence vector (val3, val4, val5, val6) of an edge link: vertex counts by
/// degree within the link. Throws if a degree falls outside 3..6.
std::array<int, 4> valence_vector(const SimplicialComplex& c, const Simplex& edge);

/// All unordered partitions of the 10 link vertices into two 5-sets whose
/// induced spans are both Moebius strips; pruned by neighborliness (no
/// non-edge pair inside one part).
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> mobius_partitions(
    const SimplicialComplex& link);

struct HamiltonianCheck {
    bool ok = false;
    std::optional<Simplex> missing; // witness non-face without antipodal pair
};

/// 2-Hamiltonicity in the cross-polytope given by an antipodal pairing:
/// every vertex set of size <= 3 avoiding all pairs must be a face.
HamiltonianCheck check_2_hamiltonian(const SimplicialComplex& c,
                                     const std::vector<std::pair<Vertex, Vertex>>& pairing);

/// Orbit representatives of the k-faces under v -> v+1 (requires the shift
/// to act on the face set); each entry is (least representative, orbit size).
std::vector<std::pair<Simplex, int>> cyclic_orbit_reps(const SimplicialComplex& c, int k);

} // namespace cyctri
