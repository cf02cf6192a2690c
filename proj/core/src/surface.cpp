#include "cyctri/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cyctri/homology.hpp"

namespace cyctri {

namespace {

// Union-find component count over the 1-skeleton.
int skeleton_components(const SimplicialComplex& c) {
    auto verts = c.support();
    if (verts.empty()) return 0;
    std::map<Vertex, Vertex> parent;
    for (Vertex v : verts) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : c.faces(1)) parent[find(e[0])] = find(e[1]);
    std::set<Vertex> roots;
    for (Vertex v : verts) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

bool is_single_path(const SimplicialComplex& c) {
    if (c.dim() != 1) return false;
    if (skeleton_components(c) != 1) return false;
    int deg1 = 0;
    for (Vertex v : c.support()) {
        int d = c.degree(v);
        if (d == 1) ++deg1;
        else if (d != 2) return false;
    }
    return deg1 == 2;
}

} // namespace

bool is_single_cycle(const SimplicialComplex& c) {
    if (c.dim() != 1) return false;
    if (skeleton_components(c) != 1) return false;
    for (Vertex v : c.support())
        if (c.degree(v) != 2) return false;
    return c.face_count(0) >= 3;
}

std::vector<Vertex> pinch_vertices(const SimplicialComplex& c) {
    std::vector<Vertex> bad;
    for (Vertex v : c.support()) {
        auto lk = c.link(Simplex({v}));
        if (!is_single_cycle(lk) && !is_single_path(lk)) bad.push_back(v);
    }
    return bad;
}

SurfaceClass classify_surface(const SimplicialComplex& c) {
    SurfaceClass s;
    if (c.dim() != 2) {
        s.defect = "not 2-dimensional";
        return s;
    }
    if (!c.is_pure()) {
        s.defect = "not pure";
        return s;
    }
    int boundary_edges = 0;
    for (const auto& e : c.faces(1)) {
        int deg = c.top_degree(e);
        if (deg > 2) {
            s.defect = "edge " + e.str() + " lies in " + std::to_string(deg) + " triangles";
            return s;
        }
        if (deg == 1) ++boundary_edges;
    }
    auto bad = pinch_vertices(c);
    if (!bad.empty()) {
        s.defect = "vertex " + std::string(1, vertex_label(bad.front())) +
                   " has a link that is not a single path or cycle";
        return s;
    }
    s.is_surface = true;
    s.connected = skeleton_components(c) == 1;
    s.closed = boundary_edges == 0;
    s.chi = c.f_vector().euler();
    s.orientable = orient(c).has_value();

    if (boundary_edges > 0) {
        // Boundary components: cycles of degree-1 edges.
        std::vector<Simplex> bd;
        for (const auto& e : c.faces(1))
            if (c.top_degree(e) == 1) bd.push_back(e);
        auto bd_complex = SimplicialComplex::from_generators(c.n(), bd);
        s.boundary_components = skeleton_components(bd_complex);
    }
    return s;
}

} // namespace cyctri
