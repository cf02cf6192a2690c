#include "cyctri/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyctri/verify.hpp"

namespace cyctri {

namespace {

// Isomorphism-invariant vertex signature used for candidate pruning:
// degree, sorted neighbor degrees, triangle count at the vertex.
std::vector<int> vertex_signature(const SimplicialComplex& c, Vertex v) {
    std::vector<int> sig{c.degree(v)};
    std::vector<int> nbr;
    for (const auto& e : c.faces(1)) {
        if (!e.contains(v)) continue;
        nbr.push_back(c.degree(e[0] == v ? e[1] : e[0]));
    }
    std::sort(nbr.begin(), nbr.end());
    sig.insert(sig.end(), nbr.begin(), nbr.end());
    int tris = 0;
    for (const auto& t : c.faces(2))
        if (t.contains(v)) ++tris;
    sig.push_back(tris);
    return sig;
}

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<Vertex> src_order;                 // source vertices, most constrained first
    std::map<Vertex, std::vector<Vertex>> cand;    // per source vertex
    std::vector<VertexMap> found;
    std::size_t limit;

    // Bitmask tables for allocation-free partial checks (needs n <= 64).
    std::vector<std::uint64_t> adj_a, adj_b;
    std::vector<bool> tri_a, tri_b;
    // sorted mask lists of the 3- and 4-faces (the 2-skeleton alone admits
    // far more bijections than the complex)
    std::vector<std::uint64_t> quad_a, quad_b, pent_a, pent_b;

    IsoSearch(const SimplicialComplex& a_, const SimplicialComplex& b_, std::size_t lim)
        : a(a_), b(b_), limit(lim) {}

    static std::vector<std::uint64_t> face_masks(const SimplicialComplex& c, int k) {
        std::vector<std::uint64_t> out;
        for (const auto& f : c.faces(k)) {
            std::uint64_t m = 0;
            for (Vertex v : f.vertices()) m |= std::uint64_t{1} << v;
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static void fill_tables(const SimplicialComplex& c, std::vector<std::uint64_t>& adj,
                            std::vector<bool>& tri) {
        const std::size_t n = static_cast<std::size_t>(c.n());
        adj.assign(n, 0);
        for (const auto& e : c.faces(1)) {
            adj[static_cast<std::size_t>(e[0])] |= std::uint64_t{1} << e[1];
            adj[static_cast<std::size_t>(e[1])] |= std::uint64_t{1} << e[0];
        }
        tri.assign(n * n * n, false);
        for (const auto& t : c.faces(2)) {
            const std::size_t x = static_cast<std::size_t>(t[0]);
            const std::size_t y = static_cast<std::size_t>(t[1]);
            const std::size_t z = static_cast<std::size_t>(t[2]);
            tri[(x * n + y) * n + z] = true;
        }
    }

    bool has_tri(const std::vector<bool>& tri, std::size_t n, Vertex x, Vertex y, Vertex z) const {
        if (x > y) std::swap(x, y);
        if (y > z) std::swap(y, z);
        if (x > y) std::swap(x, y);
        return tri[(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n +
                   static_cast<std::size_t>(z)];
    }

    bool prepare() {
        if (a.n() > 64 || b.n() > 64)
            throw std::invalid_argument("isomorphism search supports n <= 64");
        auto sa = a.support();
        auto sb = b.support();
        if (sa.size() != sb.size()) return false;
        if (a.f_vector() != b.f_vector()) return false;
        fill_tables(a, adj_a, tri_a);
        fill_tables(b, adj_b, tri_b);
        quad_a = face_masks(a, 3);
        quad_b = face_masks(b, 3);
        pent_a = face_masks(a, 4);
        pent_b = face_masks(b, 4);
        std::map<Vertex, std::vector<int>> sig_b;
        for (Vertex w : sb) sig_b[w] = vertex_signature(b, w);
        for (Vertex v : sa) {
            auto sig = vertex_signature(a, v);
            auto& list = cand[v];
            for (Vertex w : sb)
                if (sig_b[w] == sig) list.push_back(w);
            if (list.empty()) return false;
        }
        src_order = sa;
        std::stable_sort(src_order.begin(), src_order.end(), [&](Vertex x, Vertex y) {
            return cand[x].size() < cand[y].size();
        });
        return true;
    }

    bool consistent(const std::vector<std::pair<Vertex, Vertex>>& partial, Vertex v,
                    Vertex w) const {
        const std::size_t na = static_cast<std::size_t>(a.n());
        const std::size_t nb = static_cast<std::size_t>(b.n());
        for (auto [pv, pw] : partial) {
            const bool ea = adj_a[static_cast<std::size_t>(v)] >> pv & 1;
            const bool eb = adj_b[static_cast<std::size_t>(w)] >> pw & 1;
            if (ea != eb) return false;
        }
        for (std::size_t i = 0; i < partial.size(); ++i) {
            for (std::size_t j = i + 1; j < partial.size(); ++j) {
                if (has_tri(tri_a, na, v, partial[i].first, partial[j].first) !=
                    has_tri(tri_b, nb, w, partial[i].second, partial[j].second))
                    return false;
            }
        }
        // higher faces through v and assigned triples/quadruples
        auto member = [](const std::vector<std::uint64_t>& masks, std::uint64_t m) {
            return std::binary_search(masks.begin(), masks.end(), m);
        };
        const std::size_t d = partial.size();
        if (!quad_a.empty()) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j)
                    for (std::size_t k = j + 1; k < d; ++k) {
                        std::uint64_t ma = (std::uint64_t{1} << v) |
                                           (std::uint64_t{1} << partial[i].first) |
                                           (std::uint64_t{1} << partial[j].first) |
                                           (std::uint64_t{1} << partial[k].first);
                        std::uint64_t mb = (std::uint64_t{1} << w) |
                                           (std::uint64_t{1} << partial[i].second) |
                                           (std::uint64_t{1} << partial[j].second) |
                                           (std::uint64_t{1} << partial[k].second);
                        if (member(quad_a, ma) != member(quad_b, mb)) return false;
                        if (!pent_a.empty() && member(quad_a, ma)) {
                            for (std::size_t l = k + 1; l < d; ++l) {
                                std::uint64_t pa = ma | (std::uint64_t{1} << partial[l].first);
                                std::uint64_t pb = mb | (std::uint64_t{1} << partial[l].second);
                                if (member(pent_a, pa) != member(pent_b, pb)) return false;
                            }
                        }
                    }
        }
        return true;
    }

    bool full_check(const std::vector<std::pair<Vertex, Vertex>>& partial) const {
        std::vector<Vertex> images(static_cast<std::size_t>(a.n()), -1);
        for (auto [v, w] : partial) images[static_cast<std::size_t>(v)] = w;
        for (int k = 0; k <= a.dim(); ++k) {
            for (const auto& f : a.faces(k)) {
                std::vector<Vertex> iv;
                for (Vertex v : f.vertices()) iv.push_back(images[static_cast<std::size_t>(v)]);
                if (!b.contains(Simplex(std::move(iv)))) return false;
            }
        }
        return true;
    }

    // Forward-checking search: per-vertex feasible-image masks, always
    // branching on the vertex with the smallest domain.
    void run(std::vector<std::pair<Vertex, Vertex>>& partial,
             const std::vector<std::uint64_t>& domains, std::uint64_t assigned) {
        if (limit && found.size() >= limit) return;
        if (partial.size() == src_order.size()) {
            if (full_check(partial)) {
                VertexMap vm = partial;
                std::sort(vm.begin(), vm.end());
                found.push_back(std::move(vm));
            }
            return;
        }
        // most constrained unassigned vertex
        Vertex v = -1;
        int best = 65;
        for (Vertex u : src_order) {
            if (assigned >> u & 1) continue;
            int size = std::popcount(domains[static_cast<std::size_t>(u)]);
            if (size < best) {
                best = size;
                v = u;
            }
        }
        if (v < 0) return;
        std::uint64_t dom = domains[static_cast<std::size_t>(v)];
        while (dom) {
            Vertex w = std::countr_zero(dom);
            dom &= dom - 1;
            if (!consistent(partial, v, w)) continue;
            // propagate the edge and triangle relations into the domains
            const std::size_t na = static_cast<std::size_t>(a.n());
            const std::size_t nb = static_cast<std::size_t>(b.n());
            std::vector<std::uint64_t> next = domains;
            bool dead = false;
            for (Vertex u : src_order) {
                if (u == v || (assigned >> u & 1)) continue;
                auto& mask = next[static_cast<std::size_t>(u)];
                const bool edge_uv = adj_a[static_cast<std::size_t>(u)] >> v & 1;
                mask &= ~(std::uint64_t{1} << w);
                mask &= edge_uv ? adj_b[static_cast<std::size_t>(w)]
                                : ~adj_b[static_cast<std::size_t>(w)];
                // triangles through u, v and an assigned vertex
                std::uint64_t m = mask;
                while (m) {
                    Vertex x = std::countr_zero(m);
                    m &= m - 1;
                    for (auto [p, pw] : partial) {
                        if (has_tri(tri_a, na, u, v, p) != has_tri(tri_b, nb, x, w, pw)) {
                            mask &= ~(std::uint64_t{1} << x);
                            break;
                        }
                    }
                }
                if (mask == 0) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            partial.emplace_back(v, w);
            run(partial, next, assigned | (std::uint64_t{1} << v));
            partial.pop_back();
            if (limit && found.size() >= limit) return;
        }
    }
};

} // namespace

std::vector<VertexMap> all_isomorphisms(const SimplicialComplex& a, const SimplicialComplex& b,
                                        std::size_t limit) {
    IsoSearch s(a, b, limit);
    if (!s.prepare()) return {};
    std::vector<std::uint64_t> domains(static_cast<std::size_t>(a.n()), 0);
    for (const auto& [v, list] : s.cand)
        for (Vertex w : list) domains[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    std::vector<std::pair<Vertex, Vertex>> partial;
    s.run(partial, domains, 0);
    std::sort(s.found.begin(), s.found.end());
    return s.found;
}

std::vector<VertexMap> link_bijections(const SimplicialComplex& c1, Vertex v1,
                                       const SimplicialComplex& c2, Vertex v2) {
    return all_isomorphisms(c1.link(Simplex({v1})), c2.link(Simplex({v2})));
}

Perm vertex_map_to_perm(const VertexMap& m, int degree) {
    std::vector<Vertex> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    for (auto [v, w] : m) img.at(static_cast<std::size_t>(v)) = w;
    return Perm(std::move(img));
}

PermutationGroup automorphisms(const SimplicialComplex& c) {
    auto maps = all_isomorphisms(c, c);
    std::vector<Perm> elements;
    elements.reserve(maps.size());
    for (const auto& m : maps) elements.push_back(vertex_map_to_perm(m, c.n()));
    return PermutationGroup::from_elements(c.n(), std::move(elements));
}

std::vector<std::vector<int>> valence_multiset(const SimplicialComplex& c) {
    std::vector<std::vector<int>> out;
    for (const auto& e : c.faces(1)) {
        try {
            auto v = valence_vector(c, e);
            out.push_back({v[0], v[1], v[2], v[3]});
        } catch (const std::invalid_argument&) {
            out.push_back({});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IsoResult is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    IsoResult r;
    if (a.f_vector() != b.f_vector()) {
        r.refutation = "f-vectors differ: " + a.f_vector().str() + " vs " + b.f_vector().str();
        return r;
    }
    if (a.dim() >= 2 && valence_multiset(a) != valence_multiset(b)) {
        r.refutation = "edge-link valence multisets differ";
        return r;
    }
    auto maps = all_isomorphisms(a, b, 1);
    if (maps.empty()) {
        r.refutation = "exhausted search";
        return r;
    }
    r.bijection = maps.front();
    return r;
}

std::vector<int> multipliers(const SimplicialComplex& c) {
    const int n = c.n();
    if (!c.preserved_by(shift_map(n)))
        throw std::invalid_argument("cyclic shift is not an automorphism");
    std::vector<int> out;
    for (int a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (c.preserved_by(multiplier_map(n, a))) out.push_back(a);
    }
    return out;
}

} // namespace cyctri
