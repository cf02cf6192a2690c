// Acceptance suite: end-to-end checks of the workbench against the pinned
// reference values for the bundled 12-vertex complexes. One line per
// criterion; exit code = number of failed criteria.

#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyctri/bounds.hpp"
#include "cyctri/cli.hpp"
#include "cyctri/collapse.hpp"
#include "cyctri/enumerate.hpp"
#include "cyctri/homology.hpp"
#include "cyctri/io.hpp"
#include "cyctri/isomorphism.hpp"
#include "cyctri/report.hpp"
#include "cyctri/verify.hpp"

using namespace cyctri;

namespace {

struct Check {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string data(const char* name) { return std::string(CYCTRI_DATA_DIR) + "/" + name; }

SimplicialComplex load(const char* name) { return load_complex(data(name)); }

std::vector<DifferenceCycle> cycles_of(const char* name) {
    return parse_cycles_file(data(name)).cycles;
}

std::set<std::vector<DifferenceCycle>> cycle_sets(const std::vector<Candidate>& cands) {
    std::set<std::vector<DifferenceCycle>> out;
    for (const auto& c : cands) out.insert(c.cycles);
    return out;
}

std::vector<DifferenceCycle> sorted_cycles(const char* name) {
    auto v = cycles_of(name);
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------- criteria

void criterion_1_golden_expansion(Check& c) {
    auto m1 = load("m1.dc");
    std::ifstream golden_in(data("m1.fct"));
    auto golden = parse_facets(golden_in);
    std::set<Simplex> golden_set(golden.begin(), golden.end());
    c.require(golden.size() == 72, "golden file lists 72 facets");
    c.require(golden_set.size() == 72, "golden facets are distinct");
    std::set<Simplex> expanded(m1.top_faces().begin(), m1.top_faces().end());
    c.require(expanded == golden_set, "expansion equals the golden facet set");

    // byte comparison after canonical serialization
    std::ostringstream out, err;
    int code = cli::run({"expand", data("m1.dc")}, out, err);
    c.require(code == 0, "expand exits 0");
    c.require(out.str() == write_facets(golden), "expand output equals the serialized golden set");
}

void criterion_2_f_vectors(Check& c) {
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc"}) {
        auto f = load(name).f_vector();
        c.require(f == FVector{12, 60, 160, 180, 72}, std::string(name) + " f-vector");
        auto ds = check_dehn_sommerville(f);
        c.require(ds.ds1 && ds.ds2 && ds.chi == 4, std::string(name) + " Dehn-Sommerville, chi 4");
    }
    auto f = load("r41.dc").f_vector();
    c.require(f == FVector{12, 66, 204, 240, 96}, "r41 f-vector");
    c.require(f.euler() == 6, "r41 chi 6");
}

void criterion_3_classification(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();

    SearchConfig cfg;
    cfg.n = 12;
    cfg.d = 4;
    cfg.orbit_count = 6;
    cfg.required_diagonal = {{0, 6}};
    cfg.filters = {Filter::ridge_degree_2, Filter::edge_link_euler};

    std::set<std::vector<DifferenceCycle>> known;
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc"})
        known.insert(sorted_cycles(name));

    auto run_a = cycle_sets(enumerate(cfg));
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc"})
        c.require(run_a.count(sorted_cycles(name)) == 1,
                  std::string("edge-link run contains ") + name);
    for (const auto& hit : run_a)
        c.require(known.count(hit) == 1, "edge-link run stays inside the six known sets");
    c.note("edge-link run: " + std::to_string(run_a.size()) + " candidates (m6 absent: its "
           "edge 04 link has chi 1)");

    cfg.filters = {Filter::ridge_degree_2, Filter::dehn_sommerville};
    auto run_b = cycle_sets(enumerate(cfg));
    const bool m6_in_b = run_b.count(sorted_cycles("m6.dc")) > 0;
    // Recorded membership: m6 has f-vector (12,60,156,180,72), which fails
    // the first Dehn-Sommerville relation, so the f-vector-aware run drops
    // it, exactly as the narrative for the upgraded search program states.
    auto m6ds = check_dehn_sommerville(load("m6.dc").f_vector());
    c.require(!m6ds.ds1, "m6 fails the first Dehn-Sommerville relation (recorded)");
    c.require(!m6_in_b, "Dehn-Sommerville run drops m6, consistent with its f-vector");
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc"})
        c.require(run_b.count(sorted_cycles(name)) == 1,
                  std::string("Dehn-Sommerville run contains ") + name);
    c.note(std::string("Dehn-Sommerville run: m6 ") + (m6_in_b ? "present" : "absent") +
           " (recorded; m6 f-vector is (12,60,156,180,72))");

    cfg.filters = {Filter::ridge_degree_2};
    auto run_c = cycle_sets(enumerate(cfg));
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc"})
        c.require(run_c.count(sorted_cycles(name)) == 1,
                  std::string("ridge-only run recovers ") + name);
    c.note("ridge-only run: " + std::to_string(run_c.size()) +
           " closed complexes (the six known sets plus two mutually isomorphic extras "
           "with f2 = 156, both rejected by every other filter)");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 60.0, "all three single-threaded runs finish within 60 s");
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "runtime " << secs << " s";
    c.note(os.str());
}

void criterion_4_manifold_verdicts(Check& c) {
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc"}) {
        auto complex = load(name);
        auto rep = verify_manifold(complex);
        c.require(rep.is_manifold == Trivalent::yes, std::string(name) + " certified");
        for (const auto& lv : rep.link_verdicts) {
            c.require(lv.cert.verdict == Verdict::sphere,
                      std::string(name) + " link of " + lv.face.str() + " is a sphere");
            c.require(replay_certificate(complex.link(lv.face), lv.cert),
                      std::string(name) + " certificate for " + lv.face.str() + " replays");
        }
    }

    auto m6 = load("m6.dc");
    auto rep6 = verify_manifold(m6);
    c.require(rep6.is_manifold == Trivalent::no, "m6 refuted");
    Simplex e04 = simplex_from_labels("04");
    c.require(std::count(rep6.singular_faces.begin(), rep6.singular_faces.end(), e04) == 1,
              "m6 witness edge 04");
    auto lk04 = m6.link(e04);
    c.require(lk04.f_vector() == FVector{7, 18, 12}, "lk(04, m6) f-vector (7,18,12)");
    c.require(lk04.f_vector().euler() == 1, "lk(04, m6) chi 1");
    c.require(!eulerian_check(m6), "m6 is not Eulerian");

    auto r41 = load("r41.dc");
    auto rep41 = verify_manifold(r41);
    c.require(rep41.is_manifold == Trivalent::no, "r41 refuted");
    c.require(std::count(rep41.singular_faces.begin(), rep41.singular_faces.end(),
                         simplex_from_labels("01")) == 1,
              "r41 witness edge 01");
    c.require(eulerian_check(r41), "r41 is Eulerian");

    auto locus = singular_locus(r41);
    std::vector<const SingularSurface*> tori;
    for (const auto& s : locus.surfaces)
        if (s.cls.is_torus()) tori.push_back(&s);
    c.require(tori.size() == 2, "singular locus carries exactly two tori");
    if (tori.size() == 2) {
        auto orbit_entries = [](const Simplex& s) {
            return DifferenceCycle::of_simplex(s, 12).entries();
        };
        std::set<std::vector<int>> got;
        for (auto* t : tori) {
            c.require(t->cls.closed && t->cls.connected && t->cls.orientable && t->cls.chi == 0,
                      "torus classification");
            c.require(t->triangles.size() == 24, "torus has 24 triangles");
            for (const auto& g : t->generators) got.insert(orbit_entries(g));
        }
        std::set<std::vector<int>> expected{
            orbit_entries(simplex_from_labels("012")), orbit_entries(simplex_from_labels("05a")),
            orbit_entries(simplex_from_labels("015")), orbit_entries(simplex_from_labels("045"))};
        c.require(got == expected, "tori match the stated difference-3-cycle orbits");
        std::set<Simplex> t0(tori[0]->triangles.begin(), tori[0]->triangles.end());
        bool disjoint = true;
        for (const auto& t : tori[1]->triangles)
            if (t0.count(t)) disjoint = false;
        c.require(disjoint, "the two tori share no 2-faces");
    }
    c.note("r41 singular locus additionally contains the orbit of 036 (three tetrahedron-"
           "boundary 2-spheres); the two tori share the difference-1 and difference-5 edges");
}

void criterion_5_valence_and_isomorphism(Check& c) {
    auto m1 = load("m1.dc");
    const std::array<std::array<int, 4>, 5> expected{{{1, 3, 3, 1},
                                                      {2, 0, 6, 0},
                                                      {2, 2, 2, 2},
                                                      {1, 4, 1, 2},
                                                      {1, 3, 3, 1}}};
    for (int j = 1; j <= 5; ++j) {
        auto v = valence_vector(m1, Simplex({0, j}));
        c.require(v == expected[static_cast<std::size_t>(j - 1)],
                  "valence of edge 0" + std::to_string(j) + " in m1");
    }
    auto m3 = load("m3.dc");
    c.require(valence_vector(m3, simplex_from_labels("03")) == std::array<int, 4>{0, 4, 4, 0},
              "valence of edge 03 in m3");

    auto m2 = load("m2.dc");
    for (const auto& e : m2.faces(1)) {
        c.require(is_sphere_2(m2.link(e)).verdict == Verdict::sphere,
                  "edge link " + e.str() + " of m2 is a 2-sphere");
        c.require(valence_vector(m2, e) == std::array<int, 4>{2, 0, 6, 0},
                  "edge link " + e.str() + " of m2 has the subdivided-octahedron valences");
    }
    // reference model: octahedron with two opposite faces stellarly subdivided
    {
        std::vector<Simplex> tris;
        for (Vertex a : {0, 3})
            for (Vertex b : {1, 4})
                for (Vertex cc : {2, 5})
                    if (!(a == 0 && b == 1 && cc == 2) && !(a == 3 && b == 4 && cc == 5))
                        tris.push_back(Simplex({a, b, cc}));
        for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {0, 2}}) tris.push_back(Simplex({x, y, 6}));
        for (auto [x, y] : {std::pair{3, 4}, {4, 5}, {3, 5}}) tris.push_back(Simplex({x, y, 7}));
        auto reference = SimplicialComplex::from_facets(8, tris);
        c.require(is_isomorphic(reference, m2.link(simplex_from_labels("01"))).isomorphic(),
                  "m2 edge link equivalent to the twice-subdivided octahedron");
    }

    c.require(!is_isomorphic(m1, m2).isomorphic(), "m1 and m2 inequivalent");
    c.require(!is_isomorphic(m2, m3).isomorphic(), "m2 and m3 inequivalent");
    c.require(!is_isomorphic(m1, m3).isomorphic(), "m1 and m3 inequivalent");
    c.require(is_isomorphic(m1, load("m5.dc")).isomorphic(), "m1 equivalent to m5");
    c.require(is_isomorphic(m2, load("m4.dc")).isomorphic(), "m2 equivalent to m4");
}

void criterion_6_groups(Check& c) {
    auto m1 = load("m1.dc");
    auto m2 = load("m2.dc");
    auto m3 = load("m3.dc");

    auto b1 = link_bijections(m1, 0, m1, 0);
    auto b2 = link_bijections(m2, 0, m2, 0);
    auto b3 = link_bijections(m3, 0, m3, 0);
    c.require(b1.size() == 2, "two bijections on lk(0, m1)");
    c.require(b2.size() == 20, "twenty bijections on lk(0, m2)");
    c.require(b3.size() == 4, "four bijections on lk(0, m3)");

    auto has = [](const std::vector<VertexMap>& maps, const char* cycles) {
        Perm p = perm_from_cycles(cycles, 12);
        for (const auto& m : maps)
            if (vertex_map_to_perm(m, 12) == p) return true;
        return false;
    };
    c.require(has(b1, "(1,5)(2,a)(4,8)(7,b)"), "alpha among the m1 bijections");
    c.require(has(b3, "(1,b)(2,a)(3,9)(4,8)(5,7)"), "beta1 among the m3 bijections");
    c.require(has(b3, "(1,7)(3,9)(5,b)"), "beta2 among the m3 bijections");
    c.require(has(b3, "(1,5)(2,a)(4,8)(7,b)"), "beta3 among the m3 bijections");

    auto g1 = automorphisms(m1);
    auto g2 = automorphisms(m2);
    auto g3 = automorphisms(m3);
    c.require(g1.order() == 24, "order of aut(m1)");
    c.require(g2.order() == 240, "order of aut(m2)");
    c.require(g3.order() == 48, "order of aut(m3)");

    auto fp1 = analyze_group(g1, &m1);
    auto fp2 = analyze_group(g2, &m2);
    auto fp3 = analyze_group(g3, &m3);
    c.require(fp1.vertex_transitive && fp2.vertex_transitive && fp3.vertex_transitive,
              "all three groups vertex-transitive");
    c.require(!fp1.edge_transitive && fp2.edge_transitive && !fp3.edge_transitive,
              "edge-transitivity only for m2");

    c.require(fp2.center_order == 2, "center of aut(m2)");
    c.require(fp2.derived_order == 60 && fp2.derived_perfect, "derived subgroup of aut(m2)");
    c.require(fp2.normal_subgroup_orders == std::vector<std::size_t>{1, 2, 60, 120, 240},
              "normal subgroup orders of aut(m2)");
    bool cert2 = false;
    for (const auto& sc : fp2.semidirect_certificates)
        if (sc.normal_order == 60 && sc.complement_order == 4 &&
            sc.complement_structure == "cyclic")
            cert2 = true;
    c.require(cert2, "aut(m2) splits as (60,4) with a cyclic complement");

    auto shift = PermutationGroup::generated(
        12, {perm_from_cycles("(0,1,2,3,4,5,6,7,8,9,a,b)", 12)});
    bool cert1 = false;
    for (const auto& sc : fp1.semidirect_certificates)
        if (sc.normal_order == 12 && sc.complement_order == 2 &&
            sc.normal_elements == shift.elements())
            cert1 = true;
    c.require(cert1, "aut(m1) splits as (12,2) over the cyclic shift");
    bool cert3 = false;
    for (const auto& sc : fp3.semidirect_certificates)
        if (sc.normal_order == 12 && sc.complement_order == 4 &&
            sc.complement_structure == "klein_four" && sc.normal_elements == shift.elements())
            cert3 = true;
    c.require(cert3, "aut(m3) splits as (12,4) with a Klein-four complement");
}

void criterion_7_multipliers_and_spans(Check& c) {
    c.require(multipliers(load("m1.dc")) == std::vector<int>{1, 5}, "multipliers of m1");
    c.require(multipliers(load("m2.dc")) == std::vector<int>{1, 5}, "multipliers of m2");
    c.require(multipliers(load("m3.dc")) == std::vector<int>{1, 5, 7, 11}, "multipliers of m3");
    c.require(multipliers(load("r41.dc")) == std::vector<int>{1, 5, 7, 11},
              "r41 is invariant under all four multipliers");

    auto image = [](const std::vector<DifferenceCycle>& cycles, int a) {
        std::set<DifferenceCycle> out;
        for (const auto& cyc : cycles)
            for (const auto& s : cyc.expand()) {
                std::vector<Vertex> img;
                for (Vertex v : s.vertices()) img.push_back(v * a % 12);
                out.insert(DifferenceCycle::of_simplex(Simplex(std::move(img)), 12));
            }
        return std::vector<DifferenceCycle>(out.begin(), out.end());
    };
    c.require(image(cycles_of("m1.dc"), 11) == sorted_cycles("m5.dc"),
              "multiplier 11 maps the m1 cycles to the m5 cycles");
    c.require(image(cycles_of("m2.dc"), 11) == sorted_cycles("m4.dc"),
              "multiplier 11 maps the m2 cycles to the m4 cycles");

    auto lk_m2 = load("m2.dc").link(Simplex({0}));
    c.require(mobius_partitions(lk_m2).size() == 1, "unique Moebius partition for lk(0, m2)");
    c.require(mobius_partitions(load("m1.dc").link(Simplex({0}))).empty(),
              "no Moebius partition for lk(0, m1)");
    c.require(mobius_partitions(load("m3.dc").link(Simplex({0}))).empty(),
              "no Moebius partition for lk(0, m3)");

    for (const char* name : {"m1.dc", "m2.dc", "m3.dc"}) {
        auto complex = load(name);
        for (auto vs :
             {std::vector<Vertex>{0, 2, 4, 6, 8, 10}, std::vector<Vertex>{1, 3, 5, 7, 9, 11}}) {
            auto sp = complex.span(vs);
            bool octa = sp.f_vector() == FVector{6, 12, 8};
            for (Vertex v : vs) octa = octa && sp.degree(v) == 4;
            c.require(octa, std::string(name) + " parity span is an octahedron boundary");
        }
    }
}

void criterion_8_algebra(Check& c) {
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc"}) {
        auto complex = load(name);
        auto h = homology(complex);
        c.require(h.betti == std::vector<long long>{1, 0, 2, 0, 1},
                  std::string(name) + " Betti numbers");
        c.require(h.torsion_free(), std::string(name) + " torsion-free");
        auto form = intersection_form(complex);
        c.require(form.rank == 2 && form.even && form.signature == 0,
                  std::string(name) + " intersection form rank 2, even, signature 0");
    }
    auto b = check_bound_equality(4, 2, 6, 6);
    c.require(b.lbt_lhs == 20 && b.lbt_rhs == 20, "lower bound equality 20 = 20");
    c.require(b.ubt_lhs == 20 && b.ubt_rhs == 20, "upper bound equality 20 = 20");
}

void criterion_9_determinism_and_replay(Check& c) {
    // byte-identical outputs under --jobs variation
    auto run_cli = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        cli::run(args, out, err);
        return out.str();
    };
    auto e1 = run_cli({"enumerate", "--orbits", "6", "--diagonal", "0,6", "--filters",
                       "ridge,edgelink"});
    auto e4 = run_cli({"enumerate", "--orbits", "6", "--diagonal", "0,6", "--filters",
                       "ridge,edgelink", "--jobs", "4"});
    c.require(e1 == e4 && !e1.empty(), "enumerate output identical across jobs");
    auto v1 = run_cli({"verify", data("m2.dc"), "--witness", "--format", "json"});
    auto v4 = run_cli({"verify", data("m2.dc"), "--witness", "--format", "json", "--jobs", "4"});
    c.require(v1 == v4 && !v1.empty(), "verify output identical across jobs");

    // boundary of boundary vanishes on every bundled complex
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc", "r41.dc"}) {
        auto complex = load(name);
        bool zero = true;
        for (int k = 2; k <= complex.dim(); ++k)
            zero = zero && (boundary_matrix(complex, k - 1) * boundary_matrix(complex, k)).is_zero();
        c.require(zero, std::string(name) + " boundary of boundary is zero");
    }

    // Smith round-trip identities on the boundary matrices of m1
    auto m1 = load("m1.dc");
    for (int k = 1; k <= 4; ++k) {
        auto a = boundary_matrix(m1, k);
        auto s = smith_normal_form(a, true);
        c.require(s.u * a * s.v == s.d, "smith round-trip for boundary " + std::to_string(k));
    }

    // certificate replay for every sphere verdict of a full verification
    auto rep = verify_manifold(m1);
    bool replays = rep.is_manifold == Trivalent::yes;
    for (const auto& lv : rep.link_verdicts)
        replays = replays && replay_certificate(m1.link(lv.face), lv.cert);
    c.require(replays, "every m1 sphere certificate replays");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> fn;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden expansion", criterion_1_golden_expansion},
        {2, "f-vectors and Euler characteristics", criterion_2_f_vectors},
        {3, "classification re-run", criterion_3_classification},
        {4, "manifold verdicts and singular loci", criterion_4_manifold_verdicts},
        {5, "valence vectors and equivalences", criterion_5_valence_and_isomorphism},
        {6, "automorphism group data", criterion_6_groups},
        {7, "multipliers, Moebius strips, parity spans", criterion_7_multipliers_and_spans},
        {8, "homology, intersection forms, bound equalities", criterion_8_algebra},
        {9, "determinism and certificate replay", criterion_9_determinism_and_replay},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        Check check;
        try {
            crit.fn(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = check.failures.empty();
        std::cout << "criterion " << crit.id << " (" << crit.name << "): "
                  << (ok ? "PASS" : "FAIL") << "\n";
        for (const auto& n : check.notes) std::cout << "    note: " << n << "\n";
        for (const auto& f : check.failures) std::cout << "    failed: " << f << "\n";
        if (!ok) ++failed;
    }
    if (failed == 0)
        std::cout << "all " << criteria.size() << " criteria passed\n";
    else
        std::cout << failed << " criteria failed\n";
    return failed;
}
