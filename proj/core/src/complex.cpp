#include "cyctri/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyctri/difference_cycle.hpp"

namespace cyctri {

namespace {

const std::vector<Simplex> kNoFaces{};

void insert_closure(std::set<Simplex>& all, const Simplex& s) {
    // All non-empty subsets via bitmask over the vertex list.
    const auto& v = s.vertices();
    const unsigned k = static_cast<unsigned>(v.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vertex> sub;
        for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(v[i]);
        all.insert(Simplex(std::move(sub)));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_generators(int n, const std::vector<Simplex>& gens) {
    SimplicialComplex c;
    c.n_ = n;
    if (n < 0) throw std::invalid_argument("negative universe size");
    std::set<Simplex> all;
    int maxdim = -1;
    for (const auto& g : gens) {
        if (g.empty()) continue;
        if (g.vertices().back() >= n) throw std::invalid_argument("vertex id out of range");
        maxdim = std::max(maxdim, g.dim());
        insert_closure(all, g);
    }
    c.faces_.assign(static_cast<std::size_t>(maxdim + 1), {});
    for (const auto& s : all) c.faces_[static_cast<std::size_t>(s.dim())].push_back(s);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Simplex> facets) {
    if (facets.empty()) return from_generators(n, {});
    const int d = facets.front().dim();
    for (const auto& f : facets)
        if (f.dim() != d) throw std::invalid_argument("mixed facet dimensions");
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        throw std::invalid_argument("duplicate facet");
    return from_generators(n, facets);
}

SimplicialComplex SimplicialComplex::from_cycles(const std::vector<DifferenceCycle>& cycles) {
    if (cycles.empty()) throw std::invalid_argument("no cycles given");
    const int n = cycles.front().n();
    const int d = cycles.front().dim();
    std::vector<Simplex> facets;
    for (const auto& c : cycles) {
        if (c.n() != n || c.dim() != d)
            throw std::invalid_argument("cycles disagree on n or dimension");
        auto orbit = c.expand();
        facets.insert(facets.end(), orbit.begin(), orbit.end());
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return from_facets(n, std::move(facets));
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim()) return kNoFaces;
    return faces_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::face_count(int k) const { return faces(k).size(); }

long long SimplicialComplex::total_faces() const {
    long long t = 0;
    for (const auto& fs : faces_) t += static_cast<long long>(fs.size());
    return t;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return true;
    const auto& fs = faces(s.dim());
    return std::binary_search(fs.begin(), fs.end(), s);
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const auto& fs = faces(s.dim());
    auto it = std::lower_bound(fs.begin(), fs.end(), s);
    if (it == fs.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - fs.begin());
}

bool SimplicialComplex::is_pure() const {
    if (empty()) return true;
    for (const auto& m : maximal_faces())
        if (m.dim() != dim()) return false;
    return true;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
        for (const auto& s : faces(k)) {
            if (k == dim()) {
                out.push_back(s);
                continue;
            }
            bool covered = false;
            for (const auto& t : faces(k + 1)) {
                if (t.contains_all(s)) { covered = true; break; }
            }
            if (!covered) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FVector SimplicialComplex::f_vector() const {
    std::vector<long long> counts;
    counts.reserve(faces_.size());
    for (const auto& fs : faces_) counts.push_back(static_cast<long long>(fs.size()));
    return FVector(std::move(counts));
}

std::vector<Vertex> SimplicialComplex::support() const {
    std::vector<Vertex> out;
    for (const auto& s : faces(0)) out.push_back(s[0]);
    return out;
}

int SimplicialComplex::degree(Vertex v) const {
    int deg = 0;
    for (const auto& e : faces(1))
        if (e.contains(v)) ++deg;
    return deg;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!contains(s)) throw std::invalid_argument("link of a non-face");
    std::vector<Simplex> gens;
    // Faces of the link are joins-with-s of faces; collecting from the
    // maximal faces containing s is enough to generate it.
    for (const auto& m : maximal_faces()) {
        if (!m.contains_all(s)) continue;
        std::vector<Vertex> rest;
        for (Vertex v : m.vertices())
            if (!s.contains(v)) rest.push_back(v);
        if (!rest.empty()) gens.push_back(Simplex(std::move(rest)));
    }
    return from_generators(n_, gens);
}

SimplicialComplex SimplicialComplex::span(const std::vector<Vertex>& vs) const {
    std::vector<bool> in(static_cast<std::size_t>(n_), false);
    for (Vertex v : vs) {
        if (v < 0 || v >= n_) throw std::invalid_argument("span vertex out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Simplex> gens;
    for (int k = dim(); k >= 0; --k) {
        for (const auto& s : faces(k)) {
            bool inside = true;
            for (Vertex v : s.vertices())
                if (!in[static_cast<std::size_t>(v)]) { inside = false; break; }
            if (inside) gens.push_back(s);
        }
    }
    return from_generators(n_, gens);
}

std::vector<std::pair<Vertex, Vertex>> SimplicialComplex::diagonals() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
            if (!contains(Simplex({a, b}))) out.emplace_back(a, b);
    return out;
}

bool SimplicialComplex::is_centrally_symmetric() const {
    if (n_ % 2 != 0) throw std::invalid_argument("central symmetry needs an even universe");
    const int half = n_ / 2;
    if (!preserved_by(shift_map(n_, half))) return false;
    for (int k = 1; k <= dim(); ++k) {
        for (const auto& s : faces(k)) {
            for (Vertex v : s.vertices())
                if (v < half && s.contains(v + half)) return false;
        }
    }
    return true;
}

bool SimplicialComplex::preserved_by(const std::vector<Vertex>& images) const {
    if (empty()) return true;
    const auto& tops = top_faces();
    for (const auto& f : tops) {
        Simplex img = f.mapped(images);
        if (!std::binary_search(tops.begin(), tops.end(), img)) return false;
    }
    return true;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<Vertex>& images) const {
    std::vector<Simplex> gens;
    for (const auto& m : maximal_faces()) gens.push_back(m.mapped(images));
    return from_generators(n_, gens);
}

int SimplicialComplex::top_degree(const Simplex& s) const {
    int deg = 0;
    for (const auto& f : top_faces())
        if (f.contains_all(s)) ++deg;
    return deg;
}

std::vector<Vertex> shift_map(int n, int amount) {
    std::vector<Vertex> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = ((v + amount) % n + n) % n;
    return img;
}

std::vector<Vertex> multiplier_map(int n, int a) {
    std::vector<Vertex> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = ((v * a) % n + n) % n;
    return img;
}

std::vector<DifferenceCycle> cycles_of_complex(const SimplicialComplex& c) {
    if (c.empty()) return {};
    if (!c.preserved_by(shift_map(c.n())))
        throw std::invalid_argument("facet set is not invariant under the cyclic shift");
    std::set<DifferenceCycle> cycles;
    for (const auto& f : c.top_faces()) cycles.insert(DifferenceCycle::of_simplex(f, c.n()));
    return {cycles.begin(), cycles.end()};
}

} // namespace cyctri
