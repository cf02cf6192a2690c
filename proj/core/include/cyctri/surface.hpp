#pragma once

#include <string>
#include <vector>

#include "cyctri/complex.hpp"

namespace cyctri {

/// Classification of a 2-complex as a combinatorial surface.
struct SurfaceClass {
    bool is_surface = false;  // pure 2-dim, edge degrees <= 2, vertex links are paths/cycles
    bool connected = false;
    bool closed = false;      // no boundary edges
    long long chi = 0;
    bool orientable = false;
    int boundary_components = 0;
    std::string defect;       // why is_surface failed, if it did

    bool is_sphere() const { return is_surface && connected && closed && orientable && chi == 2; }
    bool is_torus() const { return is_surface && connected && closed && orientable && chi == 0; }
    bool is_mobius() const {
        return is_surface && connected && !closed && !orientable && chi == 0 &&
               boundary_components == 1;
    }
};

SurfaceClass classify_surface(const SimplicialComplex& c);

/// Whether a 1-complex is a single closed cycle (connected, every vertex of
/// degree 2, at least 3 vertices).
bool is_single_cycle(const SimplicialComplex& c);

/// Vertices of a 2-complex whose vertex link is not a single path or cycle
/// (the pinch points).
std::vector<Vertex> pinch_vertices(const SimplicialComplex& c);

} // namespace cyctri
