#include "cyctri/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyctri {

std::string to_string(Trivalent t) {
    switch (t) {
    case Trivalent::yes: return "yes";
    case Trivalent::no: return "no";
    default: return "unknown";
    }
}

PseudomanifoldCheck check_pseudomanifold(const SimplicialComplex& c) {
    PseudomanifoldCheck r;
    if (c.dim() < 1 || !c.is_pure()) throw std::invalid_argument("pseudomanifold check needs a pure complex");
    const auto& tops = c.top_faces();
    std::map<Simplex, std::vector<std::size_t>> ridges;
    for (std::size_t f = 0; f < tops.size(); ++f)
        for (std::size_t i = 0; i < tops[f].size(); ++i) ridges[tops[f].drop(i)].push_back(f);

    r.closed = true;
    for (const auto& [ridge, inc] : ridges) {
        if (inc.size() != 2) {
            r.closed = false;
            r.bad_ridges.push_back(ridge);
        }
    }

    std::vector<bool> seen(tops.size(), false);
    std::vector<std::size_t> stack{0};
    if (!tops.empty()) seen[0] = true;
    while (!stack.empty()) {
        std::size_t f = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < tops[f].size(); ++i)
            for (std::size_t g : ridges[tops[f].drop(i)])
                if (!seen[g]) {
                    seen[g] = true;
                    stack.push_back(g);
                }
    }
    r.strongly_connected =
        !tops.empty() && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    return r;
}

std::vector<std::pair<Simplex, int>> cyclic_orbit_reps(const SimplicialComplex& c, int k) {
    std::set<Simplex> remaining(c.faces(k).begin(), c.faces(k).end());
    std::vector<std::pair<Simplex, int>> reps;
    const int n = c.n();
    while (!remaining.empty()) {
        Simplex rep = *remaining.begin();
        // Collect the full orbit and keep the least member as representative.
        std::set<Simplex> orbit;
        Simplex cur = rep;
        for (int s = 0; s < n; ++s) {
            orbit.insert(cur);
            cur = cur.mapped(shift_map(n));
        }
        Simplex least = *orbit.begin();
        for (const auto& s : orbit) {
            if (!remaining.erase(s))
                throw std::logic_error("face set not invariant under the cyclic shift");
        }
        reps.emplace_back(least, static_cast<int>(orbit.size()));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

namespace {

SphereCertificate ball_union_search(const SimplicialComplex& link) {
    auto support = link.support();
    const std::size_t nv = support.size();
    // Unordered splits (part containing the first vertex), balanced first.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << (nv - 1)); m += 2) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto bal = [&](std::uint32_t m) {
            return std::abs(2 * std::popcount(m) - static_cast<int>(nv));
        };
        return bal(a) < bal(b);
    });
    SphereCertificate last;
    for (std::uint32_t m : masks) {
        BallUnionStrategy parts;
        for (std::size_t i = 0; i < nv; ++i)
            (m & (1u << i) ? parts.part_a : parts.part_b).push_back(support[i]);
        SphereCertificate cert = is_sphere_3(link, parts);
        if (cert.verdict != Verdict::unknown) return cert;
        last = std::move(cert);
    }
    last.verdict = Verdict::unknown;
    last.detail = "no vertex partition with two collapsible spans found";
    return last;
}

SphereCertificate certify_link(const SimplicialComplex& link, int link_dim,
                               const VerifyOptions& opts) {
    if (link_dim == 1) return is_circle(link);
    if (link_dim == 2) return is_sphere_2(link);
    switch (opts.strategy) {
    case VertexLinkStrategy::ball_union_search: return ball_union_search(link);
    case VertexLinkStrategy::bistellar_only:
        return is_sphere_3(link, BistellarStrategy{opts.budget, opts.seed});
    default: return is_sphere_3(link, AutoStrategy{opts.budget, opts.seed});
    }
}

std::vector<std::pair<Simplex, int>> face_reps(const SimplicialComplex& c, int k,
                                               bool transitivity) {
    if (transitivity) return cyclic_orbit_reps(c, k);
    std::vector<std::pair<Simplex, int>> reps;
    for (const auto& f : c.faces(k)) reps.emplace_back(f, 1);
    return reps;
}

std::vector<Simplex> expand_orbit(const Simplex& rep, int n, int expected) {
    std::set<Simplex> orbit;
    Simplex cur = rep;
    for (int s = 0; s < n; ++s) {
        orbit.insert(cur);
        cur = cur.mapped(shift_map(n));
    }
    if (static_cast<int>(orbit.size()) != expected)
        throw std::logic_error("orbit size mismatch");
    return {orbit.begin(), orbit.end()};
}

} // namespace

VerificationReport verify_manifold(const SimplicialComplex& c, const VerifyOptions& opts) {
    if (c.dim() != 4 || !c.is_pure())
        throw std::invalid_argument("verify_manifold expects a pure 4-complex");
    VerificationReport rep;
    rep.dim = c.dim();
    rep.fvec = c.f_vector();
    rep.pseudo = check_pseudomanifold(c);

    bool transitivity = opts.use_transitivity && c.preserved_by(shift_map(c.n()));
    rep.used_transitivity = transitivity;

    for (int k = 2; k >= 0; --k) {
        auto reps = face_reps(c, k, transitivity);
        const int link_dim = c.dim() - k - 1;
        std::vector<SphereCertificate> certs(reps.size());
        if (opts.jobs > 1 && link_dim == 3) {
            std::vector<std::future<SphereCertificate>> futs;
            futs.reserve(reps.size());
            for (const auto& [face, orbit] : reps)
                futs.push_back(std::async(std::launch::async, [&, f = face]() {
                    return certify_link(c.link(f), link_dim, opts);
                }));
            for (std::size_t i = 0; i < futs.size(); ++i) certs[i] = futs[i].get();
        } else {
            for (std::size_t i = 0; i < reps.size(); ++i)
                certs[i] = certify_link(c.link(reps[i].first), link_dim, opts);
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
            LinkVerdict lv;
            lv.face = reps[i].first;
            lv.orbit_size = reps[i].second;
            lv.cert = std::move(certs[i]);
            if (lv.cert.verdict == Verdict::not_sphere) {
                auto orbit = transitivity ? expand_orbit(lv.face, c.n(), lv.orbit_size)
                                          : std::vector<Simplex>{lv.face};
                rep.singular_faces.insert(rep.singular_faces.end(), orbit.begin(), orbit.end());
            }
            rep.link_verdicts.push_back(std::move(lv));
        }
    }
    for (const auto& r : rep.pseudo.bad_ridges) rep.singular_faces.push_back(r);
    std::sort(rep.singular_faces.begin(), rep.singular_faces.end());

    rep.eulerian = eulerian_check(c);

    bool any_unknown = false, any_refuted = !rep.pseudo.closed;
    for (const auto& lv : rep.link_verdicts) {
        if (lv.cert.verdict == Verdict::not_sphere) any_refuted = true;
        if (lv.cert.verdict == Verdict::unknown) any_unknown = true;
    }
    rep.is_manifold = any_refuted ? Trivalent::no
                     : any_unknown ? Trivalent::unknown
                                   : Trivalent::yes;
    return rep;
}

bool eulerian_check(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d < 0) return false;
    for (int k = 0; k < d; ++k) { // links of top faces are empty, chi 0 == expected
        const long long expected = 1 - ((d - k) % 2 == 0 ? 1 : -1);
        for (const auto& f : c.faces(k))
            if (c.link(f).f_vector().euler() != expected) return false;
    }
    return true;
}

namespace {

// Minimal closed groupings of singular triangles: units are either full
// shift-orbits (cyclic case) or components forced by edges with exactly two
// singular triangles. A piece is closed when every edge it touches is
// covered by exactly two of its triangles.
std::vector<std::vector<Simplex>> closed_surface_pieces(const SimplicialComplex& c,
                                                        std::vector<Simplex> tris) {
    std::sort(tris.begin(), tris.end());
    if (tris.empty()) return {};

    std::vector<std::vector<Simplex>> units;
    if (c.preserved_by(shift_map(c.n()))) {
        std::set<Simplex> remaining(tris.begin(), tris.end());
        while (!remaining.empty()) {
            Simplex seed = *remaining.begin();
            std::set<Simplex> orbit;
            Simplex cur = seed;
            for (int s = 0; s < c.n(); ++s) {
                if (remaining.count(cur)) orbit.insert(cur);
                cur = cur.mapped(shift_map(c.n()));
            }
            for (const auto& t : orbit) remaining.erase(t);
            units.emplace_back(orbit.begin(), orbit.end());
        }
    } else {
        for (const auto& t : tris) units.push_back({t});
    }

    // edge -> unit indices (with multiplicity of triangles per unit)
    auto edge_counts = [&](const std::vector<Simplex>& unit) {
        std::map<Simplex, int> cnt;
        for (const auto& t : unit)
            for (std::size_t i = 0; i < 3; ++i) ++cnt[t.drop(i)];
        return cnt;
    };
    std::vector<std::map<Simplex, int>> unit_edges;
    unit_edges.reserve(units.size());
    for (const auto& u : units) unit_edges.push_back(edge_counts(u));

    std::vector<std::vector<Simplex>> pieces;
    std::vector<bool> used(units.size(), false);
    for (std::size_t seed = 0; seed < units.size(); ++seed) {
        if (used[seed]) continue;
        // Backtracking closure: satisfy every touched edge with exactly 2
        // triangles, preferring low-index units.
        std::vector<std::size_t> chosen;
        std::function<bool(std::vector<std::size_t>&)> complete =
            [&](std::vector<std::size_t>& cur) -> bool {
            std::map<Simplex, int> cnt;
            for (std::size_t ui : cur)
                for (const auto& [e, k] : unit_edges[ui]) cnt[e] += k;
            const Simplex* open = nullptr;
            for (const auto& [e, k] : cnt) {
                if (k > 2) return false;
                if (k == 1 && !open) open = &e;
            }
            if (!open) return true;
            for (std::size_t ui = 0; ui < units.size(); ++ui) {
                if (used[ui] || std::find(cur.begin(), cur.end(), ui) != cur.end()) continue;
                if (!unit_edges[ui].count(*open)) continue;
                cur.push_back(ui);
                if (complete(cur)) return true;
                cur.pop_back();
            }
            return false;
        };
        chosen.push_back(seed);
        if (complete(chosen)) {
            std::vector<Simplex> piece;
            for (std::size_t ui : chosen) {
                used[ui] = true;
                piece.insert(piece.end(), units[ui].begin(), units[ui].end());
            }
            std::sort(piece.begin(), piece.end());
            pieces.push_back(std::move(piece));
        } else {
            // No closed completion; report the seed unit as-is.
            used[seed] = true;
            pieces.push_back(units[seed]);
        }
    }
    return pieces;
}

} // namespace

SingularLocus singular_locus(const SimplicialComplex& c, int budget, std::uint32_t seed) {
    if (c.dim() != 4 || !c.is_pure())
        throw std::invalid_argument("singular_locus expects a pure 4-complex");
    SingularLocus loc;
    const bool transitivity = c.preserved_by(shift_map(c.n()));

    for (int k = 0; k <= 3; ++k) {
        auto reps = face_reps(c, k, transitivity);
        for (const auto& [face, orbit] : reps) {
            bool singular = false;
            if (k == 3) {
                singular = c.top_degree(face) != 2;
            } else {
                VerifyOptions lopts;
                lopts.budget = budget;
                lopts.seed = seed;
                auto cert = certify_link(c.link(face), c.dim() - k - 1, lopts);
                singular = cert.verdict == Verdict::not_sphere;
            }
            if (singular) {
                auto orb = transitivity ? expand_orbit(face, c.n(), orbit)
                                        : std::vector<Simplex>{face};
                loc.faces.insert(loc.faces.end(), orb.begin(), orb.end());
            }
        }
    }
    std::sort(loc.faces.begin(), loc.faces.end());

    std::vector<Simplex> tris;
    for (const auto& f : loc.faces)
        if (f.dim() == 2) tris.push_back(f);
    for (auto& piece : closed_surface_pieces(c, std::move(tris))) {
        SingularSurface surf;
        surf.triangles = piece;
        if (transitivity) {
            std::set<Simplex> reps;
            std::set<Simplex> remaining(piece.begin(), piece.end());
            while (!remaining.empty()) {
                Simplex cur = *remaining.begin();
                Simplex least = cur;
                for (int s = 0; s < c.n(); ++s) {
                    remaining.erase(cur);
                    least = std::min(least, cur);
                    cur = cur.mapped(shift_map(c.n()));
                }
                reps.insert(least);
            }
            surf.generators.assign(reps.begin(), reps.end());
        }
        surf.cls = classify_surface(SimplicialComplex::from_generators(c.n(), surf.triangles));
        loc.surfaces.push_back(std::move(surf));
    }
    return loc;
}

std::array<int, 4> valence_vector(const SimplicialComplex& c, const Simplex& edge) {
    if (edge.dim() != 1) throw std::invalid_argument("valence vector needs an edge");
    auto lk = c.link(edge);
    std::array<int, 4> val{0, 0, 0, 0};
    for (Vertex v : lk.support()) {
        int d = lk.degree(v);
        if (d < 3 || d > 6)
            throw std::invalid_argument("edge-link degree " + std::to_string(d) +
                                        " outside 3..6 at vertex " +
                                        std::string(1, vertex_label(v)));
        ++val[static_cast<std::size_t>(d - 3)];
    }
    return val;
}

std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> mobius_partitions(
    const SimplicialComplex& link) {
    auto support = link.support();
    if (support.size() != 10)
        throw std::invalid_argument("mobius_partitions expects a link on 10 vertices");

    // Non-edge pairs within the support (the link's own diagonals).
    std::set<std::pair<Vertex, Vertex>> nonedge;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j)
            if (!link.contains(Simplex({support[i], support[j]})))
                nonedge.insert({support[i], support[j]});
    auto neighborly = [&](const std::vector<Vertex>& part) {
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (nonedge.count({std::min(part[i], part[j]), std::max(part[i], part[j])}))
                    return false;
        return true;
    };

    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
    // 5-subsets containing the least vertex, to enumerate unordered splits.
    std::function<void(std::size_t, std::vector<std::size_t>&)> rec =
        [&](std::size_t start, std::vector<std::size_t>& acc) {
            if (acc.size() == 4) {
                std::vector<Vertex> a{support[0]};
                for (auto i : acc) a.push_back(support[i]);
                std::vector<Vertex> b;
                for (std::size_t i = 1; i < support.size(); ++i)
                    if (std::find(acc.begin(), acc.end(), i) == acc.end())
                        b.push_back(support[i]);
                if (!neighborly(a) || !neighborly(b)) return;
                if (classify_surface(link.span(a)).is_mobius() &&
                    classify_surface(link.span(b)).is_mobius())
                    out.emplace_back(a, b);
                return;
            }
            for (std::size_t i = start; i < support.size(); ++i) {
                acc.push_back(i);
                rec(i + 1, acc);
                acc.pop_back();
            }
        };
    std::vector<std::size_t> acc;
    rec(1, acc);
    return out;
}

HamiltonianCheck check_2_hamiltonian(const SimplicialComplex& c,
                                     const std::vector<std::pair<Vertex, Vertex>>& pairing) {
    auto support = c.support();
    std::set<Vertex> covered;
    std::map<Vertex, Vertex> antipode;
    for (auto [a, b] : pairing) {
        if (a == b) throw std::invalid_argument("pairing maps a vertex to itself");
        covered.insert(a);
        covered.insert(b);
        antipode[a] = b;
        antipode[b] = a;
    }
    if (covered.size() != 2 * pairing.size() ||
        covered != std::set<Vertex>(support.begin(), support.end()))
        throw std::invalid_argument("pairing is not a perfect matching of the vertices");

    auto pair_free = [&](const std::vector<Vertex>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (antipode[vs[i]] == vs[j]) return false;
        return true;
    };

    HamiltonianCheck r;
    const auto& verts = support;
    const std::size_t nv = verts.size();
    std::vector<std::vector<Vertex>> subsets;
    for (std::size_t i = 0; i < nv; ++i) {
        subsets.push_back({verts[i]});
        for (std::size_t j = i + 1; j < nv; ++j) {
            subsets.push_back({verts[i], verts[j]});
            for (std::size_t k = j + 1; k < nv; ++k)
                subsets.push_back({verts[i], verts[j], verts[k]});
        }
    }
    for (const auto& vs : subsets) {
        if (!pair_free(vs)) continue;
        Simplex s(vs);
        if (!c.contains(s)) {
            r.ok = false;
            r.missing = s;
            return r;
        }
    }
    r.ok = true;
    return r;
}

} // namespace cyctri
