#include "cyctri/simplex.hpp"

#include <algorithm>

namespace cyctri {

Simplex::Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("simplex has a repeated vertex");
    if (!verts_.empty() && verts_.front() < 0)
        throw std::invalid_argument("negative vertex id");
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
    auto a = verts_.begin();
    auto b = other.verts_.begin();
    while (a != verts_.end() && b != other.verts_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return false;
    }
    return true;
}

Simplex Simplex::join(const Simplex& other) const {
    std::vector<Vertex> merged;
    merged.reserve(verts_.size() + other.verts_.size());
    std::merge(verts_.begin(), verts_.end(),
               other.verts_.begin(), other.verts_.end(),
               std::back_inserter(merged));
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw std::invalid_argument("join of non-disjoint simplices");
    Simplex s;
    s.verts_ = std::move(merged);
    return s;
}

Simplex Simplex::drop(std::size_t i) const {
    Simplex s;
    s.verts_ = verts_;
    s.verts_.erase(s.verts_.begin() + static_cast<std::ptrdiff_t>(i));
    return s;
}

std::vector<Simplex> Simplex::boundary_faces() const {
    std::vector<Simplex> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) out.push_back(drop(i));
    return out;
}

Simplex Simplex::mapped(const std::vector<Vertex>& images) const {
    std::vector<Vertex> v;
    v.reserve(verts_.size());
    for (Vertex x : verts_) v.push_back(images.at(static_cast<std::size_t>(x)));
    return Simplex(std::move(v));
}

std::string Simplex::str() const {
    std::string s;
    s.reserve(verts_.size());
    for (Vertex v : verts_) s.push_back(vertex_label(v));
    return s;
}

char vertex_label(Vertex v) {
    if (v < 0 || v >= 36) throw std::out_of_range("vertex label out of range");
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

Vertex vertex_from_label(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw std::invalid_argument(std::string("bad vertex label '") + c + "'");
}

Simplex simplex_from_labels(const std::string& s) {
    std::vector<Vertex> v;
    v.reserve(s.size());
    for (char c : s) v.push_back(vertex_from_label(c));
    return Simplex(std::move(v));
}

} // namespace cyctri
