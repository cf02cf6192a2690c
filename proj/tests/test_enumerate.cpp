#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyctri/enumerate.hpp"
#include "cyctri/io.hpp"
#include "cyctri/report.hpp"

using namespace cyctri;

namespace {

std::vector<DifferenceCycle> cycles_of(const char* name) {
    return parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/" + name).cycles;
}

std::set<std::vector<DifferenceCycle>> cycle_sets(const std::vector<Candidate>& cands) {
    std::set<std::vector<DifferenceCycle>> out;
    for (const auto& c : cands) out.insert(c.cycles);
    return out;
}

std::vector<DifferenceCycle> sorted(std::vector<DifferenceCycle> v) {
    std::sort(v.begin(), v.end());
    return v;
}

SearchConfig classification_config() {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.d = 4;
    cfg.orbit_count = 6;
    cfg.required_diagonal = {{0, 6}};
    cfg.filters = {Filter::ridge_degree_2, Filter::edge_link_euler};
    return cfg;
}

// Exhaustive reference search without any pruning: try every k-subset of the
// pool, expand, and apply the filters on the built complex.
std::vector<std::vector<DifferenceCycle>> brute_force(const SearchConfig& cfg,
                                                      const std::vector<DifferenceCycle>& pool) {
    std::vector<std::vector<DifferenceCycle>> hits;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(idx.size()) == cfg.orbit_count) {
            std::vector<DifferenceCycle> chosen;
            for (auto i : idx) chosen.push_back(pool[i]);
            auto complex = SimplicialComplex::from_cycles(chosen);
            if (cfg.required_diagonal &&
                complex.contains(Simplex(
                    {cfg.required_diagonal->first, cfg.required_diagonal->second})))
                return;
            // structural ridge bound, as in the searched contract
            for (const auto& r : complex.faces(complex.dim() - 1))
                if (complex.top_degree(r) > 2) return;
            for (Filter f : cfg.filters)
                if (!evaluate_filter(complex, f)) return;
            hits.push_back(chosen);
            return;
        }
        for (std::size_t i = idx.empty() ? 0 : idx.back() + 1; i < pool.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace

TEST_CASE("pseudomanifold filter evaluation") {
    auto m1 = SimplicialComplex::from_cycles(cycles_of("m1.dc"));
    CHECK(evaluate_filter(m1, Filter::ridge_degree_2));
    CHECK(evaluate_filter(m1, Filter::edge_link_euler));
    CHECK(evaluate_filter(m1, Filter::dehn_sommerville));
    CHECK(!evaluate_filter(m1, Filter::vertex_degree_complete)); // it has diagonals

    auto m6 = SimplicialComplex::from_cycles(cycles_of("m6.dc"));
    CHECK(evaluate_filter(m6, Filter::ridge_degree_2));
    CHECK(!evaluate_filter(m6, Filter::edge_link_euler));
    CHECK(!evaluate_filter(m6, Filter::dehn_sommerville)); // f2 = 156

    auto r41 = SimplicialComplex::from_cycles(cycles_of("r41.dc"));
    CHECK(evaluate_filter(r41, Filter::edge_link_euler));
    CHECK(evaluate_filter(r41, Filter::vertex_degree_complete)); // complete 1-skeleton
}

TEST_CASE("classification run finds exactly the five manifold candidate sets") {
    auto cands = enumerate(classification_config());
    auto got = cycle_sets(cands);
    std::set<std::vector<DifferenceCycle>> expected;
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc"})
        expected.insert(sorted(cycles_of(name)));
    CHECK(got == expected);
    for (const auto& c : cands) {
        CHECK(std::is_sorted(c.cycles.begin(), c.cycles.end()));
        for (const auto& [f, pass] : c.filter_trace) CHECK(pass);
    }
}

TEST_CASE("ridge-only run also finds the three non-manifold deliveries") {
    auto cfg = classification_config();
    cfg.filters = {Filter::ridge_degree_2};
    auto got = cycle_sets(enumerate(cfg));
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc"})
        CHECK(got.count(sorted(cycles_of(name))));
    CHECK(got.size() == 8); // two extra closed complexes beyond the six (recorded)
}

TEST_CASE("Dehn-Sommerville run excludes the 156-triangle complexes") {
    auto cfg = classification_config();
    cfg.filters = {Filter::ridge_degree_2, Filter::dehn_sommerville};
    auto got = cycle_sets(enumerate(cfg));
    CHECK(got.size() == 5);
    CHECK(!got.count(sorted(cycles_of("m6.dc"))));
}

TEST_CASE("the 8-orbit unrestricted run finds exactly one complex") {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.d = 4;
    cfg.orbit_count = 8;
    cfg.filters = {Filter::ridge_degree_2, Filter::edge_link_euler};
    auto cands = enumerate(cfg);
    REQUIRE(cands.size() == 1);
    CHECK(cands.front().cycles == sorted(cycles_of("r41.dc")));
}

TEST_CASE("pruned search agrees with the unpruned reference on a reduced pool") {
    // pool restricted to the cycles appearing in the six deliveries
    std::set<DifferenceCycle> pool_set;
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc"})
        for (const auto& c : cycles_of(name)) pool_set.insert(c);
    std::vector<DifferenceCycle> pool(pool_set.begin(), pool_set.end());
    CHECK(pool.size() == 12);

    auto cfg = classification_config();
    cfg.pool = pool;

    SUBCASE("with both filters") {
        auto pruned = enumerate(cfg);
        auto reference = brute_force(cfg, pool);
        std::vector<std::vector<DifferenceCycle>> got;
        for (const auto& c : pruned) got.push_back(c.cycles);
        CHECK(got == reference);
        CHECK(got.size() == 5);
    }
    SUBCASE("ridge filter only") {
        cfg.filters = {Filter::ridge_degree_2};
        auto pruned = enumerate(cfg);
        auto reference = brute_force(cfg, pool);
        std::vector<std::vector<DifferenceCycle>> got;
        for (const auto& c : pruned) got.push_back(c.cycles);
        CHECK(got == reference);
    }
}

TEST_CASE("removing a filter never shrinks the output") {
    std::set<DifferenceCycle> pool_set;
    for (const char* name : {"m1.dc", "m2.dc", "m3.dc", "m4.dc", "m5.dc", "m6.dc"})
        for (const auto& c : cycles_of(name)) pool_set.insert(c);
    auto cfg = classification_config();
    cfg.pool = std::vector<DifferenceCycle>(pool_set.begin(), pool_set.end());

    auto with_both = cycle_sets(enumerate(cfg));
    cfg.filters = {Filter::ridge_degree_2};
    auto ridge_only = cycle_sets(enumerate(cfg));
    cfg.filters = {};
    auto unfiltered = cycle_sets(enumerate(cfg));

    CHECK(std::includes(ridge_only.begin(), ridge_only.end(), with_both.begin(),
                        with_both.end()));
    CHECK(std::includes(unfiltered.begin(), unfiltered.end(), ridge_only.begin(),
                        ridge_only.end()));
}

TEST_CASE("output does not depend on the parallelism setting") {
    auto cfg = classification_config();
    auto text1 = report::candidates_text(enumerate(cfg));
    cfg.parallelism = 4;
    auto text4 = report::candidates_text(enumerate(cfg));
    cfg.parallelism = 3;
    auto text3 = report::candidates_text(enumerate(cfg));
    CHECK(text1 == text4);
    CHECK(text1 == text3);
}

TEST_CASE("configuration validation") {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.d = 3;
    cfg.filters = {Filter::dehn_sommerville};
    CHECK_THROWS_AS(enumerate(cfg), std::invalid_argument);

    SearchConfig bad;
    bad.required_diagonal = {{0, 12}};
    CHECK_THROWS_AS(enumerate(bad), std::invalid_argument);

    SearchConfig zero;
    zero.orbit_count = 0;
    CHECK_THROWS_AS(enumerate(zero), std::invalid_argument);
}
