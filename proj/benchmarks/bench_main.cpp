#include <benchmark/benchmark.h>

#include "cyctri/certify.hpp"
#include "cyctri/enumerate.hpp"
#include "cyctri/homology.hpp"
#include "cyctri/io.hpp"
#include "cyctri/isomorphism.hpp"
#include "cyctri/verify.hpp"

using namespace cyctri;

namespace {

SimplicialComplex load(const char* name) {
    return load_complex(std::string(CYCTRI_DATA_DIR) + "/" + name);
}

void BM_ExpandAndClose(benchmark::State& state) {
    auto cycles = parse_cycles_file(std::string(CYCTRI_DATA_DIR) + "/m1.dc").cycles;
    for (auto _ : state) {
        auto c = SimplicialComplex::from_cycles(cycles);
        benchmark::DoNotOptimize(c.total_faces());
    }
}
BENCHMARK(BM_ExpandAndClose);

void BM_VertexLink(benchmark::State& state) {
    auto m1 = load("m1.dc");
    for (auto _ : state) {
        auto lk = m1.link(Simplex({0}));
        benchmark::DoNotOptimize(lk.face_count(3));
    }
}
BENCHMARK(BM_VertexLink);

void BM_SphereCheckBistellar(benchmark::State& state) {
    auto lk0 = load("m1.dc").link(Simplex({0}));
    for (auto _ : state) {
        auto cert = is_sphere_3(lk0, AutoStrategy{});
        benchmark::DoNotOptimize(cert.verdict);
    }
}
BENCHMARK(BM_SphereCheckBistellar)->Unit(benchmark::kMillisecond);

void BM_VerifyManifold(benchmark::State& state) {
    auto m2 = load("m2.dc");
    for (auto _ : state) {
        auto rep = verify_manifold(m2);
        benchmark::DoNotOptimize(rep.is_manifold);
    }
}
BENCHMARK(BM_VerifyManifold)->Unit(benchmark::kMillisecond);

void BM_EnumerateSixOrbits(benchmark::State& state) {
    SearchConfig cfg;
    cfg.orbit_count = 6;
    cfg.required_diagonal = {{0, 6}};
    cfg.filters = {Filter::ridge_degree_2, Filter::edge_link_euler};
    for (auto _ : state) {
        auto cands = enumerate(cfg);
        benchmark::DoNotOptimize(cands.size());
    }
}
BENCHMARK(BM_EnumerateSixOrbits)->Unit(benchmark::kMillisecond);

void BM_EnumerateEightOrbits(benchmark::State& state) {
    SearchConfig cfg;
    cfg.orbit_count = 8;
    cfg.filters = {Filter::ridge_degree_2, Filter::edge_link_euler};
    for (auto _ : state) {
        auto cands = enumerate(cfg);
        benchmark::DoNotOptimize(cands.size());
    }
}
BENCHMARK(BM_EnumerateEightOrbits)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
    auto m2 = load("m2.dc");
    for (auto _ : state) {
        auto g = automorphisms(m2);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
    auto m3 = load("m3.dc");
    for (auto _ : state) {
        auto h = homology(m3);
        benchmark::DoNotOptimize(h.chi);
    }
}
BENCHMARK(BM_Homology)->Unit(benchmark::kMillisecond);

void BM_IntersectionForm(benchmark::State& state) {
    auto m3 = load("m3.dc");
    for (auto _ : state) {
        auto f = intersection_form(m3);
        benchmark::DoNotOptimize(f.signature);
    }
}
BENCHMARK(BM_IntersectionForm)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
