#include "cyctri/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyctri/homology.hpp"
#include "cyctri/surface.hpp"

namespace cyctri {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::sphere: return "sphere";
    case Verdict::not_sphere: return "not_sphere";
    default: return "unknown";
    }
}

std::string to_string(CertMethod m) {
    switch (m) {
    case CertMethod::cycle_check: return "cycle_check";
    case CertMethod::ball_union: return "ball_union";
    case CertMethod::bistellar: return "bistellar";
    case CertMethod::homology_refute: return "homology_refute";
    default: return "disconnected_refute";
    }
}

namespace {

bool skeleton_connected(const SimplicialComplex& c) {
    auto verts = c.support();
    if (verts.empty()) return false;
    std::set<Vertex> seen{verts.front()};
    std::vector<Vertex> stack{verts.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& e : c.faces(1)) {
            if (!e.contains(v)) continue;
            Vertex w = e[0] == v ? e[1] : e[0];
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == verts.size();
}

} // namespace

SphereCertificate is_circle(const SimplicialComplex& c) {
    SphereCertificate cert;
    cert.method = CertMethod::cycle_check;
    if (c.dim() != 1) throw std::invalid_argument("is_circle expects a 1-complex");
    cert.chi = c.f_vector().euler();
    if (!skeleton_connected(c)) {
        cert.verdict = Verdict::not_sphere;
        cert.method = CertMethod::disconnected_refute;
        cert.detail = "1-complex is disconnected";
        return cert;
    }
    for (Vertex v : c.support()) {
        if (c.degree(v) != 2) {
            cert.verdict = Verdict::not_sphere;
            cert.offending = Simplex({v});
            cert.detail = "vertex " + std::string(1, vertex_label(v)) + " has degree " +
                          std::to_string(c.degree(v));
            return cert;
        }
    }
    cert.verdict = Verdict::sphere;
    cert.detail = "single closed cycle";
    return cert;
}

SphereCertificate is_sphere_2(const SimplicialComplex& c) {
    if (c.dim() != 2 || !c.is_pure())
        throw std::invalid_argument("is_sphere_2 expects a pure 2-complex");
    SphereCertificate cert;
    cert.method = CertMethod::cycle_check;
    cert.chi = c.f_vector().euler();
    if (!skeleton_connected(c)) {
        cert.verdict = Verdict::not_sphere;
        cert.method = CertMethod::disconnected_refute;
        cert.detail = "2-complex is disconnected";
        return cert;
    }
    for (Vertex v : c.support()) {
        if (!is_single_cycle(c.link(Simplex({v})))) cert.pinches.push_back(v);
    }
    if (!cert.pinches.empty()) {
        cert.verdict = Verdict::not_sphere;
        cert.offending = Simplex({cert.pinches.front()});
        std::ostringstream os;
        os << "vertex links not a single cycle at:";
        for (Vertex v : cert.pinches) os << ' ' << vertex_label(v);
        cert.detail = os.str();
        return cert;
    }
    if (*cert.chi != 2) {
        cert.verdict = Verdict::not_sphere;
        cert.detail = "closed surface with chi = " + std::to_string(*cert.chi);
        return cert;
    }
    cert.verdict = Verdict::sphere;
    cert.detail = "connected, all vertex links single cycles, chi = 2";
    return cert;
}

namespace {

// Closed-3-manifold pre-check: connected, all triangles in exactly two
// tetrahedra, all vertex links 2-spheres. Returns a refutation certificate
// or nullopt when everything passes.
std::optional<SphereCertificate> closed_3_manifold_defect(const SimplicialComplex& c) {
    SphereCertificate cert;
    if (!skeleton_connected(c)) {
        cert.verdict = Verdict::not_sphere;
        cert.method = CertMethod::disconnected_refute;
        cert.detail = "3-complex is disconnected";
        return cert;
    }
    for (const auto& t : c.faces(2)) {
        int deg = c.top_degree(t);
        if (deg != 2) {
            cert.verdict = Verdict::not_sphere;
            cert.method = CertMethod::cycle_check;
            cert.offending = t;
            cert.detail = "triangle " + t.str() + " lies in " + std::to_string(deg) +
                          " tetrahedra";
            return cert;
        }
    }
    for (Vertex v : c.support()) {
        SphereCertificate inner = is_sphere_2(c.link(Simplex({v})));
        if (inner.verdict != Verdict::sphere) {
            cert.verdict = Verdict::not_sphere;
            cert.method = CertMethod::cycle_check;
            cert.offending = Simplex({v});
            cert.pinches = inner.pinches;
            cert.detail = "link of vertex " + std::string(1, vertex_label(v)) +
                          " is not a 2-sphere (" + inner.detail + ")";
            return cert;
        }
    }
    return std::nullopt;
}

SphereCertificate sphere_3_ball_union(const SimplicialComplex& c, const BallUnionStrategy& s) {
    auto support = c.support();
    std::set<Vertex> all(support.begin(), support.end());
    std::set<Vertex> pa(s.part_a.begin(), s.part_a.end());
    std::set<Vertex> pb(s.part_b.begin(), s.part_b.end());
    std::set<Vertex> both;
    both.insert(pa.begin(), pa.end());
    both.insert(pb.begin(), pb.end());
    if (pa.empty() || pb.empty() || both != all || pa.size() + pb.size() != all.size())
        throw std::invalid_argument("ball_union parts must partition the vertex set");

    if (auto defect = closed_3_manifold_defect(c)) return *defect;

    SphereCertificate cert;
    cert.method = CertMethod::ball_union;
    cert.part_a = s.part_a;
    cert.part_b = s.part_b;
    CollapseResult ca = collapse(c.span(s.part_a));
    CollapseResult cb = collapse(c.span(s.part_b));
    if (!ca.collapsible || !cb.collapsible) {
        cert.verdict = Verdict::unknown;
        cert.detail = "greedy collapse of a span got stuck (no conclusion)";
        return cert;
    }
    cert.collapse_a = ca.steps;
    cert.collapse_b = cb.steps;
    cert.verdict = Verdict::sphere;
    cert.detail = "closed 3-manifold split into two collapsible spans";
    return cert;
}

SphereCertificate sphere_3_bistellar(const SimplicialComplex& c, int budget, std::uint32_t seed) {
    SphereCertificate cert;
    cert.method = CertMethod::bistellar;
    BistellarOutcome out = bistellar_reduce(c, budget, seed);
    if (out.reduced) {
        cert.verdict = Verdict::sphere;
        cert.flips = out.moves;
        cert.detail = "reduced to the boundary of the 4-simplex in " +
                      std::to_string(out.moves.size()) + " flips";
    } else {
        cert.verdict = Verdict::unknown;
        cert.detail = "flip budget exhausted after " + std::to_string(out.flips_used) + " flips";
    }
    return cert;
}

} // namespace

SphereCertificate is_sphere_3(const SimplicialComplex& c, const SphereStrategy& strategy) {
    if (c.dim() != 3 || !c.is_pure())
        throw std::invalid_argument("is_sphere_3 expects a pure 3-complex");

    if (auto* bu = std::get_if<BallUnionStrategy>(&strategy)) return sphere_3_ball_union(c, *bu);
    if (auto* bs = std::get_if<BistellarStrategy>(&strategy))
        return sphere_3_bistellar(c, bs->budget, bs->seed);

    const auto& au = std::get<AutoStrategy>(strategy);
    if (auto defect = closed_3_manifold_defect(c)) return *defect;

    HomologyProfile h = homology(c);
    const bool sphere_homology =
        h.torsion_free() && h.betti == std::vector<long long>{1, 0, 0, 1};
    if (!sphere_homology) {
        SphereCertificate cert;
        cert.verdict = Verdict::not_sphere;
        cert.method = CertMethod::homology_refute;
        std::ostringstream os;
        os << "homology differs from the 3-sphere: betti (";
        for (std::size_t i = 0; i < h.betti.size(); ++i) os << (i ? "," : "") << h.betti[i];
        os << ")" << (h.torsion_free() ? "" : " with torsion");
        cert.detail = os.str();
        return cert;
    }
    return sphere_3_bistellar(c, au.budget, au.seed);
}

bool replay_certificate(const SimplicialComplex& c, const SphereCertificate& cert) {
    switch (cert.verdict) {
    case Verdict::unknown:
        return true; // nothing claimed
    case Verdict::sphere:
        switch (cert.method) {
        case CertMethod::cycle_check:
            if (c.dim() == 1) return is_circle(c).verdict == Verdict::sphere;
            return is_sphere_2(c).verdict == Verdict::sphere;
        case CertMethod::ball_union: {
            if (closed_3_manifold_defect(c)) return false;
            std::set<Vertex> pa(cert.part_a.begin(), cert.part_a.end());
            std::set<Vertex> pb(cert.part_b.begin(), cert.part_b.end());
            auto support = c.support();
            std::set<Vertex> all(support.begin(), support.end());
            std::set<Vertex> both = pa;
            both.insert(pb.begin(), pb.end());
            if (both != all || pa.size() + pb.size() != all.size()) return false;
            return replay_collapse(c.span(cert.part_a), cert.collapse_a) &&
                   replay_collapse(c.span(cert.part_b), cert.collapse_b);
        }
        case CertMethod::bistellar:
            return replay_bistellar(c, cert.flips);
        default:
            return false;
        }
    case Verdict::not_sphere:
        switch (cert.method) {
        case CertMethod::disconnected_refute:
            return !skeleton_connected(c);
        case CertMethod::homology_refute: {
            HomologyProfile h = homology(c);
            return !(h.torsion_free() && h.betti == std::vector<long long>{1, 0, 0, 1});
        }
        case CertMethod::cycle_check: {
            if (!cert.pinches.empty()) {
                for (Vertex v : cert.pinches) {
                    auto lk = c.link(Simplex({v}));
                    if (lk.dim() == 1 && is_single_cycle(lk)) return false;
                    if (lk.dim() == 2 && is_sphere_2(lk).verdict == Verdict::sphere) return false;
                }
                return true;
            }
            if (cert.offending) {
                const Simplex& s = *cert.offending;
                if (!c.contains(s)) return false;
                if (s.dim() == static_cast<int>(c.dim()) - 1)
                    return c.top_degree(s) != 2;
                auto lk = c.link(s);
                if (lk.dim() == 1) return is_circle(lk).verdict != Verdict::sphere;
                if (lk.dim() == 2) return is_sphere_2(lk).verdict != Verdict::sphere;
                return true;
            }
            if (cert.chi) {
                // chi-based refutation of a closed surface
                return c.f_vector().euler() == *cert.chi && *cert.chi != 2;
            }
            return false;
        }
        default:
            return false;
        }
    }
    return false;
}

} // namespace cyctri
