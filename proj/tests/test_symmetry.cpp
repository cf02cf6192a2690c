#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyctri/io.hpp"
#include "cyctri/isomorphism.hpp"
#include "cyctri/verify.hpp"

using namespace cyctri;

namespace {

SimplicialComplex load(const char* name) {
    return load_complex(std::string(CYCTRI_DATA_DIR) + "/" + name);
}

SimplicialComplex simplex_boundary(int k) {
    std::vector<Simplex> facets;
    std::vector<Vertex> all;
    for (Vertex v = 0; v <= k; ++v) all.push_back(v);
    Simplex full(all);
    for (std::size_t i = 0; i < full.size(); ++i) facets.push_back(full.drop(i));
    return SimplicialComplex::from_facets(k + 1, facets);
}

bool contains_perm(const std::vector<VertexMap>& maps, const Perm& p, int degree) {
    for (const auto& m : maps)
        if (vertex_map_to_perm(m, degree) == p) return true;
    return false;
}

std::set<DifferenceCycle> multiplier_image(const std::vector<DifferenceCycle>& cycles, int a) {
    std::set<DifferenceCycle> out;
    for (const auto& c : cycles) {
        for (const auto& s : c.expand()) {
            std::vector<Vertex> img;
            for (Vertex v : s.vertices()) img.push_back(v * a % 12);
            out.insert(DifferenceCycle::of_simplex(Simplex(std::move(img)), 12));
        }
    }
    return out;
}

} // namespace

TEST_CASE("link bijections reproduce the small stabilizers") {
    auto m1 = load("m1.dc");
    auto b1 = link_bijections(m1, 0, m1, 0);
    CHECK(b1.size() == 2);
    CHECK(contains_perm(b1, perm_from_cycles("(1,5)(2,a)(4,8)(7,b)", 12), 12));

    auto m2 = load("m2.dc");
    CHECK(link_bijections(m2, 0, m2, 0).size() == 20);

    auto m3 = load("m3.dc");
    auto b3 = link_bijections(m3, 0, m3, 0);
    CHECK(b3.size() == 4);
    CHECK(contains_perm(b3, perm_from_cycles("(1,b)(2,a)(3,9)(4,8)(5,7)", 12), 12));
    CHECK(contains_perm(b3, perm_from_cycles("(1,7)(3,9)(5,b)", 12), 12));
    CHECK(contains_perm(b3, perm_from_cycles("(1,5)(2,a)(4,8)(7,b)", 12), 12));
}

TEST_CASE("automorphism groups of the bundled complexes") {
    auto m1 = load("m1.dc");
    auto g1 = automorphisms(m1);
    CHECK(g1.order() == 24);
    CHECK(g1.contains(perm_from_cycles("(0,1,2,3,4,5,6,7,8,9,a,b)", 12)));

    CHECK(automorphisms(load("m2.dc")).order() == 240);
    CHECK(automorphisms(load("m3.dc")).order() == 48);

    SUBCASE("the 4-simplex boundary has the full symmetric group") {
        CHECK(automorphisms(simplex_boundary(4)).order() == 120);
    }
    SUBCASE("inequality against the vertex-link stabilizer") {
        // |Aut| <= f0 * |Aut(lk(0))|, with equality here
        CHECK(g1.order() == 12 * link_bijections(m1, 0, m1, 0).size());
        auto m2 = load("m2.dc");
        CHECK(automorphisms(m2).order() == 12 * link_bijections(m2, 0, m2, 0).size());
        auto m3 = load("m3.dc");
        CHECK(automorphisms(m3).order() == 12 * link_bijections(m3, 0, m3, 0).size());
    }
    SUBCASE("the shift to the sixth power is fixed-point free") {
        auto z6 = perm_from_cycles("(0,6)(1,7)(2,8)(3,9)(4,a)(5,b)", 12);
        CHECK(g1.contains(z6));
        for (Vertex v = 0; v < 12; ++v) CHECK(z6(v) != v);
    }
}

TEST_CASE("multipliers") {
    CHECK(multipliers(load("m1.dc")) == std::vector<int>{1, 5});
    CHECK(multipliers(load("m2.dc")) == std::vector<int>{1, 5});
    CHECK(multipliers(load("m3.dc")) == std::vector<int>{1, 5, 7, 11});
    CHECK(multipliers(load("r41.dc")) == std::vector<int>{1, 5, 7, 11});

    SUBCASE("lower bound on the group order") {
        CHECK(automorphisms(load("m1.dc")).order() >= 2 * 12);
        CHECK(automorphisms(load("m3.dc")).order() >= 4 * 12);
    }
    SUBCASE("a complex without the cyclic symmetry is rejected") {
        auto lopsided = SimplicialComplex::from_facets(4, {Simplex({0, 1, 2})});
        CHECK_THROWS_AS(multipliers(lopsided), std::invalid_argument);
    }
}

TEST_CASE("multiplier images permute the candidate sets") {
    auto c1 = parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/m1.dc").cycles;
    auto c2 = parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/m2.dc").cycles;
    auto c4 = parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/m4.dc").cycles;
    auto c5 = parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/m5.dc").cycles;

    std::set<DifferenceCycle> s4(c4.begin(), c4.end());
    std::set<DifferenceCycle> s5(c5.begin(), c5.end());

    CHECK(multiplier_image(c1, 11) == s5);
    CHECK(multiplier_image(c2, 11) == s4);
    // multiplier 7 = 11 * 5 and 5 fixes these complexes, so images coincide
    CHECK(multiplier_image(c1, 7) == s5);
    CHECK(multiplier_image(c2, 7) == s4);

    std::set<DifferenceCycle> s1(c1.begin(), c1.end());
    CHECK(multiplier_image(c1, 5) == s1);
}

TEST_CASE("isomorphism decisions") {
    auto m1 = load("m1.dc");
    auto m2 = load("m2.dc");
    auto m3 = load("m3.dc");

    SUBCASE("confirmations") {
        auto m5 = load("m5.dc");
        auto r15 = is_isomorphic(m1, m5);
        REQUIRE(r15.isomorphic());
        // the found bijection really maps facets onto facets
        auto p = vertex_map_to_perm(*r15.bijection, 12);
        for (const auto& f : m1.top_faces()) CHECK(m5.contains(f.mapped(p.images())));

        CHECK(is_isomorphic(m2, load("m4.dc")).isomorphic());
        auto self = is_isomorphic(m3, m3);
        CHECK(self.isomorphic());
    }
    SUBCASE("refutations cite the valence invariant") {
        for (auto [a, b] : {std::pair{&m1, &m2}, {&m2, &m3}, {&m1, &m3}}) {
            auto r = is_isomorphic(*a, *b);
            CHECK(!r.isomorphic());
            CHECK(r.refutation == "edge-link valence multisets differ");
        }
    }
    SUBCASE("valence multisets distinguish the three types") {
        auto v1 = valence_multiset(m1);
        auto v2 = valence_multiset(m2);
        auto v3 = valence_multiset(m3);
        CHECK(v1 != v2);
        CHECK(v2 != v3);
        CHECK(v1 != v3);
    }
}

TEST_CASE("edge links of m2 are mutually equivalent subdivided octahedra") {
    auto m2 = load("m2.dc");
    auto reps = cyclic_orbit_reps(m2, 1);
    REQUIRE(reps.size() == 5);
    auto first = m2.link(reps.front().first);
    for (const auto& [edge, orbit] : reps) {
        auto lk = m2.link(edge);
        CHECK(valence_vector(m2, edge) == std::array<int, 4>{2, 0, 6, 0});
        CHECK(is_isomorphic(first, lk).isomorphic());
    }
}

TEST_CASE("group fingerprints") {
    SUBCASE("aut(m2)") {
        auto m2 = load("m2.dc");
        auto g = automorphisms(m2);
        auto fp = analyze_group(g, &m2);
        CHECK(fp.order == 240);
        CHECK(fp.vertex_transitive);
        CHECK(fp.edge_transitive);
        CHECK(fp.center_order == 2);
        CHECK(fp.derived_order == 60);
        CHECK(fp.derived_perfect);
        CHECK(fp.normal_subgroup_orders == std::vector<std::size_t>{1, 2, 60, 120, 240});
        bool found_60_4 = false;
        for (const auto& c : fp.semidirect_certificates)
            if (c.normal_order == 60 && c.complement_order == 4 &&
                c.complement_structure == "cyclic")
                found_60_4 = true;
        CHECK(found_60_4);
        CHECK(fp.abelianization == std::vector<std::size_t>{4});
    }
    SUBCASE("aut(m1) splits over the cyclic normal subgroup") {
        auto m1 = load("m1.dc");
        auto g = automorphisms(m1);
        auto fp = analyze_group(g, &m1);
        CHECK(fp.order == 24);
        CHECK(fp.vertex_transitive);
        CHECK(!fp.edge_transitive);
        auto shift = PermutationGroup::generated(
            12, {perm_from_cycles("(0,1,2,3,4,5,6,7,8,9,a,b)", 12)});
        bool found = false;
        for (const auto& c : fp.semidirect_certificates)
            if (c.normal_order == 12 && c.complement_order == 2 &&
                c.normal_elements == shift.elements())
                found = true;
        CHECK(found);
    }
    SUBCASE("aut(m3) splits with a Klein-four complement") {
        auto m3 = load("m3.dc");
        auto g = automorphisms(m3);
        auto fp = analyze_group(g, &m3);
        CHECK(fp.order == 48);
        CHECK(fp.vertex_transitive);
        CHECK(!fp.edge_transitive);
        auto shift = PermutationGroup::generated(
            12, {perm_from_cycles("(0,1,2,3,4,5,6,7,8,9,a,b)", 12)});
        bool found = false;
        for (const auto& c : fp.semidirect_certificates)
            if (c.normal_order == 12 && c.complement_order == 4 &&
                c.complement_structure == "klein_four" && c.normal_elements == shift.elements())
                found = true;
        CHECK(found);
    }
    SUBCASE("trivial group") {
        auto fp = analyze_group(PermutationGroup::generated(3, {}));
        CHECK(fp.order == 1);
        CHECK(fp.center_order == 1);
        CHECK(fp.derived_order == 1);
        CHECK(!fp.derived_perfect);
        CHECK(fp.abelianization.empty());
        CHECK(fp.normal_subgroup_orders == std::vector<std::size_t>{1});
    }
}

TEST_CASE("no order-120 subgroup of aut(m2) looks like the symmetric group") {
    // Index-2 subgroups all contain the derived subgroup, so the normal
    // subgroup lattice lists every order-120 subgroup. The symmetric-group
    // profile would be: trivial center and abelianization of order 2.
    auto m2 = load("m2.dc");
    auto g = automorphisms(m2);
    auto halves = index_two_subgroups(g);
    CHECK(!halves.empty());
    for (const auto& h : halves) {
        auto fp = analyze_group(h);
        CHECK(fp.order == 120);
        bool s5_profile = fp.center_order == 1 && fp.abelianization == std::vector<std::size_t>{2};
        CHECK(!s5_profile);
    }
}

TEST_CASE("permutation plumbing") {
    auto p = perm_from_cycles("(1,5)(2,a)(4,8)(7,b)", 12);
    CHECK(p.cycle_str() == "(1,5)(2,a)(4,8)(7,b)");
    CHECK(p.order() == 2);
    CHECK(p.then(p).is_identity());
    CHECK(Perm::identity(12).cycle_str() == "()");
    auto z = perm_from_cycles("(0,1,2,3,4,5,6,7,8,9,a,b)", 12);
    CHECK(z.order() == 12);
    CHECK(z.inverse()(0) == 11);
}
