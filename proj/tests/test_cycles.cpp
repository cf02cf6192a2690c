#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cyctri/difference_cycle.hpp"
#include "cyctri/enumerate.hpp"
#include "cyctri/io.hpp"

using namespace cyctri;

namespace {

// Brute-force canonicalization oracle: enumerate every rotation, take the
// least. Kept independent of least_rotation's implementation.
std::vector<int> least_rotation_oracle(std::vector<int> w) {
    std::set<std::vector<int>> all;
    for (std::size_t i = 0; i < w.size(); ++i) {
        all.insert(w);
        std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    return *all.begin();
}

std::set<Simplex> facet_set(const DifferenceCycle& c) {
    auto v = c.expand();
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("canonical form is the least rotation") {
    auto c = DifferenceCycle::make({8, 1, 1, 1, 1}, 12);
    CHECK(c.entries() == std::vector<int>{1, 1, 1, 1, 8});

    auto d = DifferenceCycle::make({3, 2, 3, 2, 2}, 12);
    CHECK(d.entries() == std::vector<int>{2, 2, 3, 2, 3});
    CHECK(d.entries() == least_rotation_oracle({3, 2, 3, 2, 2}));

    // Reversal is a different orbit, not a rotation.
    auto e = DifferenceCycle::make({1, 4, 3, 2, 2}, 12);
    CHECK(e.entries() == std::vector<int>{1, 4, 3, 2, 2});
    CHECK(e.reversed().entries() != e.entries());
    CHECK(facet_set(e) != facet_set(e.reversed()));

    // The reversed orbit is exactly the negated orbit.
    std::set<Simplex> negated;
    for (const auto& s : e.expand()) {
        std::vector<Vertex> img;
        for (Vertex v : s.vertices()) img.push_back((12 - v) % 12);
        negated.insert(Simplex(std::move(img)));
    }
    CHECK(facet_set(e.reversed()) == negated);
}

TEST_CASE("expansion of a difference cycle") {
    auto c = DifferenceCycle::make({1, 1, 1, 1, 8}, 12);
    auto orbit = c.expand();
    CHECK(orbit.size() == 12);
    CHECK(c.orbit_length() == 12);
    CHECK(std::binary_search(orbit.begin(), orbit.end(), Simplex({0, 1, 2, 3, 4})));

    auto edges = DifferenceCycle::make({6, 6}, 12);
    CHECK(edges.orbit_length() == 6);
    CHECK(edges.expand().size() == 6);

    SUBCASE("equivariance under the shift") {
        for (const auto& cyc : {DifferenceCycle::make({2, 2, 3, 2, 3}, 12),
                                DifferenceCycle::make({1, 1, 2, 1, 7}, 12)}) {
            auto fs = facet_set(cyc);
            std::set<Simplex> shifted;
            for (const auto& s : fs) {
                std::vector<Vertex> img;
                for (Vertex v : s.vertices()) img.push_back((v + 1) % 12);
                shifted.insert(Simplex(std::move(img)));
            }
            CHECK(shifted == fs);
        }
    }
}

TEST_CASE("cycle from a simplex") {
    auto c = DifferenceCycle::of_simplex(Simplex({0, 1, 2, 3, 4}), 12);
    CHECK(c.entries() == std::vector<int>{1, 1, 1, 1, 8});
    auto d = DifferenceCycle::of_simplex(simplex_from_labels("0158a"), 12);
    CHECK(d.entries() == std::vector<int>{1, 4, 3, 2, 2});
}

TEST_CASE("cycle pool: all canonical 5-entry cycles mod 12") {
    auto pool = generate_cycle_pool(12, 4);

    // Composition count oracle: 12 into 5 positive parts, then divide by the
    // free rotation action (no 5-periodic word sums to 12), so 330/5 = 66.
    long long compositions = 0;
    for (int a = 1; a < 12; ++a)
        for (int b = 1; a + b < 12; ++b)
            for (int c = 1; a + b + c < 12; ++c)
                for (int d = 1; a + b + c + d < 12; ++d) ++compositions;
    CHECK(compositions == 330);
    CHECK(pool.size() == 66);

    CHECK(std::is_sorted(pool.begin(), pool.end()));
    std::set<DifferenceCycle> dedup(pool.begin(), pool.end());
    CHECK(dedup.size() == pool.size());
    CHECK(dedup.count(DifferenceCycle::make({1, 1, 1, 1, 8}, 12)) == 1);

    SUBCASE("every pool cycle has a full orbit and canonical entries") {
        for (const auto& c : pool) {
            CHECK(c.orbit_length() == 12);
            CHECK(c.expand().size() == 12);
            CHECK(c.entries() == least_rotation_oracle(c.entries()));
            long long sum = 0;
            for (int e : c.entries()) sum += e;
            CHECK(sum == 12);
        }
    }
}

TEST_CASE("cycle file parsing") {
    SUBCASE("well-formed file") {
        std::istringstream in("# comment\nn=12 d=4\n1 1 1 1 8\n2 2 3 2 3 # trailing\n");
        auto f = parse_cycles(in);
        CHECK(f.n == 12);
        CHECK(f.d == 4);
        REQUIRE(f.cycles.size() == 2);
        CHECK(f.cycles[0].entries() == std::vector<int>{1, 1, 1, 1, 8});
    }
    SUBCASE("sum mismatch") {
        std::istringstream in("n=12 d=4\n1 1 1 1 7\n");
        CHECK_THROWS_WITH_AS(parse_cycles(in), doctest::Contains("sum to 11"), ParseError);
    }
    SUBCASE("non-positive entry") {
        std::istringstream in("n=12 d=4\n1 1 1 0 9\n");
        CHECK_THROWS_AS(parse_cycles(in), ParseError);
    }
    SUBCASE("duplicate after canonicalization") {
        std::istringstream in("n=12 d=4\n1 1 1 1 8\n8 1 1 1 1\n");
        CHECK_THROWS_WITH_AS(parse_cycles(in), doctest::Contains("duplicate"), ParseError);
    }
    SUBCASE("missing header") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(parse_cycles(in), ParseError);
    }
    SUBCASE("wrong entry count") {
        std::istringstream in("n=12 d=4\n6 6\n");
        CHECK_THROWS_AS(parse_cycles(in), ParseError);
    }
}

TEST_CASE("bundled cycle files round-trip byte for byte") {
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc", "r41.dc"}) {
        std::string path = std::string(CYCTRI_DATA_DIR) + "/" + name;
        CAPTURE(path);
        auto parsed = parse_cycles_file(path);
        // parse -> expand -> re-extract canonical cycles -> serialize
        auto complex = SimplicialComplex::from_cycles(parsed.cycles);
        auto extracted = cycles_of_complex(complex);
        CycleFile out{parsed.n, parsed.d, extracted};
        std::ifstream raw(path);
        std::stringstream buf;
        buf << raw.rdbuf();
        CHECK(write_cycles(out) == buf.str());
    }
}
