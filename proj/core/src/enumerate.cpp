#include "cyctri/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "cyctri/fvector.hpp"

namespace cyctri {

std::string to_string(Filter f) {
    switch (f) {
    case Filter::ridge_degree_2: return "ridge_degree_2";
    case Filter::edge_link_euler: return "edge_link_euler";
    case Filter::vertex_degree_complete: return "vertex_degree_complete";
    default: return "dehn_sommerville";
    }
}

std::optional<Filter> filter_from_string(const std::string& s) {
    if (s == "ridge" || s == "ridge_degree_2") return Filter::ridge_degree_2;
    if (s == "edgelink" || s == "edge_link_euler") return Filter::edge_link_euler;
    if (s == "vertexdeg" || s == "vertex_degree_complete") return Filter::vertex_degree_complete;
    if (s == "ds" || s == "dehn_sommerville") return Filter::dehn_sommerville;
    return std::nullopt;
}

std::vector<DifferenceCycle> generate_cycle_pool(int n, int d) {
    if (n <= d || d < 1) throw std::invalid_argument("pool needs n > d >= 1");
    std::vector<DifferenceCycle> pool;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int slots) {
        if (slots == 1) {
            if (remaining >= 1) {
                parts.push_back(remaining);
                if (least_rotation(parts) == parts)
                    pool.push_back(DifferenceCycle::make(parts, n));
                parts.pop_back();
            }
            return;
        }
        for (int e = 1; e + (slots - 1) <= remaining; ++e) {
            parts.push_back(e);
            rec(remaining - e, slots - 1);
            parts.pop_back();
        }
    };
    rec(n, d + 1);
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool evaluate_filter(const SimplicialComplex& c, Filter f) {
    switch (f) {
    case Filter::ridge_degree_2: {
        for (const auto& r : c.faces(c.dim() - 1))
            if (c.top_degree(r) != 2) return false;
        return true;
    }
    case Filter::edge_link_euler: {
        for (const auto& e : c.faces(1))
            if (c.link(e).f_vector().euler() != 2) return false;
        return true;
    }
    case Filter::vertex_degree_complete:
        return static_cast<long long>(c.face_count(1)) ==
               static_cast<long long>(c.n()) * (c.n() - 1) / 2;
    case Filter::dehn_sommerville: {
        auto ds = check_dehn_sommerville(c.f_vector());
        return ds.ds1 && ds.ds2;
    }
    }
    return false;
}

namespace {

using Mask = std::uint64_t;

struct CycleData {
    std::vector<Mask> facets;                       // orbit as vertex bitmasks
    std::vector<std::pair<int, std::uint8_t>> ridges; // (ridge id, multiplicity)
    int max_vertex_pairs = 0;
};

struct LeafChecker {
    int n;
    std::vector<Filter> filters;
    bool has(Filter f) const {
        return std::find(filters.begin(), filters.end(), f) != filters.end();
    }

    // Leaf filters evaluated on raw facet masks (cheap, no closure build).
    bool passes(const std::vector<Mask>& facets, int open_ridges) const {
        for (Filter f : filters) {
            switch (f) {
            case Filter::ridge_degree_2:
                if (open_ridges != 0) return false;
                break;
            case Filter::edge_link_euler:
                if (!edge_links_ok(facets)) return false;
                break;
            case Filter::vertex_degree_complete:
                if (!skeleton_complete(facets)) return false;
                break;
            case Filter::dehn_sommerville:
                if (!ds_ok(facets)) return false;
                break;
            }
        }
        return true;
    }

    bool edge_links_ok(const std::vector<Mask>& facets) const {
        std::set<Mask> edges;
        for (Mask f : facets) collect_subsets(f, 2, edges);
        for (Mask e : edges) {
            std::set<Mask> lk_edges;
            Mask lk_verts = 0;
            int tris = 0;
            for (Mask f : facets) {
                if ((f & e) != e) continue;
                Mask rest = f & ~e;
                lk_verts |= rest;
                ++tris;
                collect_subsets(rest, 2, lk_edges);
            }
            long long chi = std::popcount(lk_verts) - static_cast<long long>(lk_edges.size()) + tris;
            if (chi != 2) return false;
        }
        return true;
    }

    bool skeleton_complete(const std::vector<Mask>& facets) const {
        std::set<Mask> edges;
        for (Mask f : facets) collect_subsets(f, 2, edges);
        return static_cast<long long>(edges.size()) ==
               static_cast<long long>(n) * (n - 1) / 2;
    }

    bool ds_ok(const std::vector<Mask>& facets) const {
        std::array<std::set<Mask>, 4> sub; // sizes 1,2,3,4
        for (Mask f : facets)
            for (int k = 1; k <= 4; ++k) collect_subsets(f, k, sub[static_cast<std::size_t>(k - 1)]);
        FVector fv{static_cast<long long>(sub[0].size()), static_cast<long long>(sub[1].size()),
                   static_cast<long long>(sub[2].size()), static_cast<long long>(sub[3].size()),
                   static_cast<long long>(facets.size())};
        auto ds = check_dehn_sommerville(fv);
        return ds.ds1 && ds.ds2;
    }

    static void collect_subsets(Mask m, int k, std::set<Mask>& out) {
        std::vector<int> bits;
        for (int b = 0; b < 64; ++b)
            if (m & (Mask{1} << b)) bits.push_back(b);
        std::vector<int> idx;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (static_cast<int>(idx.size()) == k) {
                Mask s = 0;
                for (int i : idx) s |= Mask{1} << bits[static_cast<std::size_t>(i)];
                out.insert(s);
                return;
            }
            for (std::size_t i = start; i < bits.size(); ++i) {
                idx.push_back(static_cast<int>(i));
                rec(i + 1);
                idx.pop_back();
            }
        };
        rec(0);
    }
};

struct Searcher {
    const SearchConfig& cfg;
    std::vector<DifferenceCycle> pool;      // after diagonal exclusion
    std::vector<CycleData> data;
    std::vector<int> ridge_max_cover;       // largest pool index covering a ridge
    std::vector<std::vector<bool>> pair_ok; // pairwise ridge compatibility
    LeafChecker leaf;
    bool want_closed = false;

    explicit Searcher(const SearchConfig& c) : cfg(c), leaf{c.n, c.filters} {
        if (cfg.n > 64) throw std::invalid_argument("enumerate supports n <= 64");
        if (cfg.orbit_count < 1) throw std::invalid_argument("orbit_count must be >= 1");
        if (leaf.has(Filter::dehn_sommerville) && cfg.d != 4)
            throw std::invalid_argument("dehn_sommerville filter needs d = 4");
        if (cfg.required_diagonal) {
            auto [a, b] = *cfg.required_diagonal;
            if (a < 0 || b < 0 || a >= cfg.n || b >= cfg.n || a == b)
                throw std::invalid_argument("required diagonal out of range");
        }
        want_closed = leaf.has(Filter::ridge_degree_2);

        std::vector<DifferenceCycle> raw =
            cfg.pool ? *cfg.pool : generate_cycle_pool(cfg.n, cfg.d);
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

        std::map<Mask, int> ridge_ids;
        for (const auto& cyc : raw) {
            if (cyc.n() != cfg.n || cyc.dim() != cfg.d)
                throw std::invalid_argument("pool cycle has wrong n or d");
            std::vector<Mask> facets;
            bool hits_diagonal = false;
            for (const auto& s : cyc.expand()) {
                Mask m = 0;
                for (Vertex v : s.vertices()) m |= Mask{1} << v;
                facets.push_back(m);
                if (cfg.required_diagonal) {
                    Mask diag = (Mask{1} << cfg.required_diagonal->first) |
                                (Mask{1} << cfg.required_diagonal->second);
                    if ((m & diag) == diag) hits_diagonal = true;
                }
            }
            if (hits_diagonal) continue;

            CycleData cd;
            cd.facets = std::move(facets);
            std::map<int, int> counts;
            for (Mask f : cd.facets) {
                for (int b = 0; b < cfg.n; ++b) {
                    if (!(f & (Mask{1} << b))) continue;
                    Mask ridge = f & ~(Mask{1} << b);
                    auto [it, fresh] = ridge_ids.try_emplace(ridge, static_cast<int>(ridge_ids.size()));
                    ++counts[it->second];
                }
            }
            bool overfull = std::any_of(counts.begin(), counts.end(),
                                        [](const auto& kv) { return kv.second > 2; });
            if (overfull) continue; // the orbit alone already violates ridge degrees
            for (auto [rid, cnt] : counts)
                cd.ridges.emplace_back(rid, static_cast<std::uint8_t>(cnt));
            pool.push_back(cyc);
            data.push_back(std::move(cd));
        }

        ridge_max_cover.assign(ridge_ids.size(), -1);
        for (std::size_t i = 0; i < data.size(); ++i)
            for (auto [rid, cnt] : data[i].ridges)
                ridge_max_cover[static_cast<std::size_t>(rid)] = static_cast<int>(i);

        pair_ok.assign(pool.size(), std::vector<bool>(pool.size(), false));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                bool ok = true;
                // both incidence lists are sorted by ridge id
                auto a = data[i].ridges.begin();
                auto b = data[j].ridges.begin();
                while (a != data[i].ridges.end() && b != data[j].ridges.end()) {
                    if (a->first < b->first) ++a;
                    else if (b->first < a->first) ++b;
                    else {
                        if (a->second + b->second > 2) { ok = false; break; }
                        ++a; ++b;
                    }
                }
                pair_ok[i][j] = pair_ok[j][i] = ok;
            }
        }
    }

    // DFS from a fixed first cycle; appends emitted cycle lists in order.
    void search_from(std::size_t first, std::vector<std::vector<std::size_t>>& hits) const {
        std::vector<std::uint8_t> deg(ridge_max_cover.size(), 0);
        std::vector<std::size_t> chosen;
        int open = 0;
        if (!apply(first, deg, open)) return;
        chosen.push_back(first);
        dfs(chosen, deg, open, hits);
    }

    bool apply(std::size_t idx, std::vector<std::uint8_t>& deg, int& open) const {
        for (auto [rid, cnt] : data[idx].ridges)
            if (deg[static_cast<std::size_t>(rid)] + cnt > 2) return false;
        for (auto [rid, cnt] : data[idx].ridges) {
            auto& d = deg[static_cast<std::size_t>(rid)];
            if (d == 1) --open;
            d = static_cast<std::uint8_t>(d + cnt);
            if (d == 1) ++open;
        }
        return true;
    }

    void undo(std::size_t idx, std::vector<std::uint8_t>& deg, int& open) const {
        for (auto [rid, cnt] : data[idx].ridges) {
            auto& d = deg[static_cast<std::size_t>(rid)];
            if (d == 1) --open;
            d = static_cast<std::uint8_t>(d - cnt);
            if (d == 1) ++open;
        }
    }

    // A degree-1 ridge nobody later can cover kills the branch when the
    // search must end closed.
    bool dangling(std::size_t last, const std::vector<std::uint8_t>& deg) const {
        if (!want_closed) return false;
        for (std::size_t r = 0; r < deg.size(); ++r)
            if (deg[r] == 1 && ridge_max_cover[r] <= static_cast<int>(last)) return true;
        return false;
    }

    void dfs(std::vector<std::size_t>& chosen, std::vector<std::uint8_t>& deg, int open,
             std::vector<std::vector<std::size_t>>& hits) const {
        if (static_cast<int>(chosen.size()) == cfg.orbit_count) {
            std::vector<Mask> facets;
            for (std::size_t i : chosen)
                facets.insert(facets.end(), data[i].facets.begin(), data[i].facets.end());
            if (leaf.passes(facets, open)) hits.push_back(chosen);
            return;
        }
        if (dangling(chosen.back(), deg)) return;
        for (std::size_t j = chosen.back() + 1; j < pool.size(); ++j) {
            bool compatible = true;
            for (std::size_t i : chosen)
                if (!pair_ok[i][j]) { compatible = false; break; }
            if (!compatible) continue;
            if (!apply(j, deg, open)) continue;
            chosen.push_back(j);
            dfs(chosen, deg, open, hits);
            chosen.pop_back();
            undo(j, deg, open);
        }
    }
};

} // namespace

std::vector<Candidate> enumerate(const SearchConfig& cfg) {
    Searcher s(cfg);
    const std::size_t firsts = s.pool.size();
    std::vector<std::vector<std::vector<std::size_t>>> per_first(firsts);

    const int jobs = std::max(1, cfg.parallelism);
    if (jobs == 1) {
        for (std::size_t f = 0; f < firsts; ++f) s.search_from(f, per_first[f]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&]() {
                for (;;) {
                    std::size_t f = next.fetch_add(1);
                    if (f >= firsts) return;
                    s.search_from(f, per_first[f]);
                }
            });
        for (auto& w : workers) w.join();
    }

    std::vector<Candidate> out;
    for (const auto& hits : per_first) {
        for (const auto& chosen : hits) {
            Candidate cand;
            for (std::size_t i : chosen) cand.cycles.push_back(s.pool[i]);
            cand.complex = SimplicialComplex::from_cycles(cand.cycles);
            for (Filter f : cfg.filters) cand.filter_trace[f] = evaluate_filter(cand.complex, f);
            out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace cyctri
