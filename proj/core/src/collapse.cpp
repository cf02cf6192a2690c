#include "cyctri/collapse.hpp"

#include <map>
#include <set>

namespace cyctri {

namespace {

// Mutable face-set view; small complexes, so recomputing coface info per
// step is fine.
struct FaceSet {
    std::set<Simplex> faces;

    explicit FaceSet(const SimplicialComplex& c) {
        for (int k = 0; k <= c.dim(); ++k)
            faces.insert(c.faces(k).begin(), c.faces(k).end());
    }

    // Proper cofaces of s currently present.
    std::vector<Simplex> cofaces(const Simplex& s) const {
        std::vector<Simplex> out;
        for (const auto& t : faces)
            if (t.size() > s.size() && t.contains_all(s)) out.push_back(t);
        return out;
    }

    // Least free face together with its unique coface.
    std::optional<CollapseStep> next_free() const {
        for (const auto& s : faces) {
            auto cf = cofaces(s);
            if (cf.size() == 1) return CollapseStep{s, cf.front()};
        }
        return std::nullopt;
    }

    bool is_point() const { return faces.size() == 1 && faces.begin()->dim() == 0; }
};

} // namespace

CollapseResult collapse(const SimplicialComplex& c) {
    CollapseResult res;
    if (c.empty()) return res;
    FaceSet fs(c);
    while (!fs.is_point()) {
        auto step = fs.next_free();
        if (!step) return res; // stuck
        fs.faces.erase(step->first);
        fs.faces.erase(step->second);
        res.steps.push_back(*step);
    }
    res.collapsible = true;
    return res;
}

bool replay_collapse(const SimplicialComplex& c, const std::vector<CollapseStep>& steps) {
    if (c.empty()) return false;
    FaceSet fs(c);
    for (const auto& [free, coface] : steps) {
        if (!fs.faces.count(free) || !fs.faces.count(coface)) return false;
        if (coface.size() != free.size() + 1 || !coface.contains_all(free)) return false;
        auto cf = fs.cofaces(free);
        if (cf.size() != 1 || cf.front() != coface) return false;
        fs.faces.erase(free);
        fs.faces.erase(coface);
    }
    return fs.is_point();
}

} // namespace cyctri
