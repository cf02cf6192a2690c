#include "cyctri/bistellar.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace cyctri {

BistellarState::BistellarState(const SimplicialComplex& c) : n_(c.n()) {
    if (c.dim() != 3 || !c.is_pure())
        throw std::invalid_argument("bistellar moves need a pure 3-complex");
    tets_ = c.faces(3);
}

bool BistellarState::is_valid_input(const SimplicialComplex& c) {
    return c.dim() == 3 && c.is_pure();
}

std::vector<Simplex> BistellarState::cofaces(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const auto& t : tets_)
        if (t.contains_all(s)) out.push_back(t);
    return out;
}

namespace {

bool tet_present(const std::vector<Simplex>& tets, const Simplex& t) {
    return std::binary_search(tets.begin(), tets.end(), t);
}

// Vertices of the cofaces outside the pivot.
std::vector<Vertex> opposite_vertices(const std::vector<Simplex>& cofaces, const Simplex& pivot) {
    std::set<Vertex> opp;
    for (const auto& t : cofaces)
        for (Vertex v : t.vertices())
            if (!pivot.contains(v)) opp.insert(v);
    return {opp.begin(), opp.end()};
}

} // namespace

bool BistellarState::legal(const BistellarMove& m) const {
    const auto cf = cofaces(m.pivot);
    switch (m.kind) {
    case 1: { // triangle shared by 2 tets; new edge must be absent
        if (m.pivot.dim() != 2 || cf.size() != 2) return false;
        auto opp = opposite_vertices(cf, m.pivot);
        if (opp.size() != 2) return false;
        // The edge {p,q} is absent iff no tetrahedron contains both.
        for (const auto& t : tets_)
            if (t.contains(opp[0]) && t.contains(opp[1])) return false;
        return true;
    }
    case 2: { // edge in exactly 3 tets forming a cycle; new triangle absent
        if (m.pivot.dim() != 1 || cf.size() != 3) return false;
        auto opp = opposite_vertices(cf, m.pivot);
        if (opp.size() != 3) return false;
        Simplex tri(std::vector<Vertex>{opp[0], opp[1], opp[2]});
        for (const auto& t : cf)
            if (!t.contains_all(m.pivot)) return false;
        // The three tets must be pivot * (each edge of tri).
        for (std::size_t i = 0; i < 3; ++i) {
            Simplex expect = m.pivot.join(tri.drop(i));
            if (!tet_present(tets_, expect)) return false;
        }
        for (const auto& t : tets_)
            if (t.contains_all(tri)) return false;
        return true;
    }
    case 3: { // vertex in exactly 4 tets = cone over boundary of a tet
        if (m.pivot.dim() != 0 || cf.size() != 4) return false;
        auto opp = opposite_vertices(cf, m.pivot);
        if (opp.size() != 4) return false;
        Simplex tet(std::vector<Vertex>{opp[0], opp[1], opp[2], opp[3]});
        for (std::size_t i = 0; i < 4; ++i) {
            Simplex expect = m.pivot.join(tet.drop(i));
            if (!tet_present(tets_, expect)) return false;
        }
        return !tet_present(tets_, tet);
    }
    default:
        return false;
    }
}

bool BistellarState::apply(const BistellarMove& m) {
    if (!legal(m)) return false;
    const auto cf = cofaces(m.pivot);
    auto opp = opposite_vertices(cf, m.pivot);
    std::vector<Simplex> added;
    if (m.kind == 1) {
        // new edge * each boundary edge of the pivot triangle
        Simplex edge(std::vector<Vertex>{opp[0], opp[1]});
        for (std::size_t i = 0; i < 3; ++i) added.push_back(edge.join(m.pivot.drop(i)));
    } else if (m.kind == 2) {
        Simplex tri(std::vector<Vertex>{opp[0], opp[1], opp[2]});
        for (std::size_t i = 0; i < 2; ++i) added.push_back(tri.join(m.pivot.drop(i)));
    } else {
        added.push_back(Simplex(std::vector<Vertex>{opp[0], opp[1], opp[2], opp[3]}));
    }
    std::vector<Simplex> next;
    next.reserve(tets_.size());
    for (const auto& t : tets_)
        if (std::find(cf.begin(), cf.end(), t) == cf.end()) next.push_back(t);
    next.insert(next.end(), added.begin(), added.end());
    std::sort(next.begin(), next.end());
    tets_ = std::move(next);
    return true;
}

bool BistellarState::is_boundary_of_4_simplex() const {
    if (tets_.size() != 5) return false;
    std::set<Vertex> verts;
    for (const auto& t : tets_)
        for (Vertex v : t.vertices()) verts.insert(v);
    if (verts.size() != 5) return false;
    std::vector<Vertex> vs(verts.begin(), verts.end());
    Simplex full(vs);
    for (std::size_t i = 0; i < 5; ++i)
        if (!tet_present(tets_, full.drop(i))) return false;
    return true;
}

std::vector<BistellarMove> BistellarState::legal_moves() const {
    std::vector<BistellarMove> out;
    std::set<Simplex> tried;
    for (const auto& t : tets_) {
        for (std::size_t i = 0; i < 4; ++i) {
            // vertices, edges and triangles of this tet
            Simplex tri = t.drop(i);
            if (tried.insert(tri).second) {
                BistellarMove m{1, tri};
                if (legal(m)) out.push_back(m);
            }
            for (std::size_t j = 0; j < 3; ++j) {
                Simplex edge = tri.drop(j);
                if (tried.insert(edge).second) {
                    BistellarMove m{2, edge};
                    if (legal(m)) out.push_back(m);
                }
            }
        }
        for (Vertex v : t.vertices()) {
            Simplex vert({v});
            if (tried.insert(vert).second) {
                BistellarMove m{3, vert};
                if (legal(m)) out.push_back(m);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const BistellarMove& a, const BistellarMove& b) {
        return a.kind != b.kind ? a.kind > b.kind : a.pivot < b.pivot;
    });
    return out;
}

SimplicialComplex BistellarState::to_complex() const {
    int n = n_;
    for (const auto& t : tets_) n = std::max(n, t.vertices().back() + 1);
    return SimplicialComplex::from_facets(n, tets_);
}

BistellarOutcome bistellar_reduce(const SimplicialComplex& c, int budget, std::uint32_t seed) {
    BistellarOutcome out;
    if (!BistellarState::is_valid_input(c)) return out;
    std::mt19937 rng(seed);
    int flips = 0;
    const int max_restarts = 8;
    for (int restart = 0; restart < max_restarts && flips < budget; ++restart) {
        BistellarState st(c);
        std::vector<BistellarMove> trace;
        int plateau = 0;
        while (flips < budget) {
            if (st.is_boundary_of_4_simplex()) {
                out.reduced = true;
                out.moves = std::move(trace);
                out.flips_used = flips;
                return out;
            }
            auto moves = st.legal_moves();
            if (moves.empty()) break;
            // Shrinking moves are listed first (kind 3, then 2); take the
            // first one. On a plateau pick a random lateral 2->3 move.
            const BistellarMove* pick = nullptr;
            if (moves.front().kind >= 2) {
                pick = &moves.front();
                plateau = 0;
            } else {
                std::uniform_int_distribution<std::size_t> dist(0, moves.size() - 1);
                pick = &moves[dist(rng)];
                if (++plateau > 64) break; // restart with fresh randomness
            }
            BistellarMove m = *pick;
            st.apply(m);
            trace.push_back(std::move(m));
            ++flips;
        }
    }
    out.flips_used = flips;
    return out;
}

bool replay_bistellar(const SimplicialComplex& c, const std::vector<BistellarMove>& moves) {
    if (!BistellarState::is_valid_input(c)) return false;
    BistellarState st(c);
    for (const auto& m : moves)
        if (!st.apply(m)) return false;
    return st.is_boundary_of_4_simplex();
}

} // namespace cyctri
