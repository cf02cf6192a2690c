#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyctri {

using Vertex = int;

/// Abstract simplex: a strictly increasing sequence of vertex ids.
class Simplex {
public:
    Simplex() = default;

    /// Builds from an arbitrary vertex list; sorts and rejects repeats.
    explicit Simplex(std::vector<Vertex> verts);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex operator[](std::size_t i) const { return verts_[i]; }

    bool contains(Vertex v) const;
    bool contains_all(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;

    /// Sorted union of two vertex-disjoint simplices.
    Simplex join(const Simplex& other) const;

    /// Face obtained by dropping the vertex at position i.
    Simplex drop(std::size_t i) const;

    /// All faces of codimension one, in drop-index order.
    std::vector<Simplex> boundary_faces() const;

    /// Image under a vertex map given as images[v]; re-sorts.
    Simplex mapped(const std::vector<Vertex>& images) const;

    /// Compact label string, base-12 style digits 0-9,a,b,... for v >= 10.
    std::string str() const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<Vertex> verts_;
};

char vertex_label(Vertex v);
Vertex vertex_from_label(char c);

/// Parses a digit string like "0158a" into a simplex.
Simplex simplex_from_labels(const std::string& s);

} // namespace cyctri
