#include "cyctri/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyctri {

PermutationGroup PermutationGroup::generated(int degree, const std::vector<Perm>& gens,
                                             std::size_t cap) {
    std::set<Perm> closure{Perm::identity(degree)};
    std::vector<Perm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                Perm y = x.then(g);
                if (closure.insert(y).second) {
                    if (closure.size() > cap)
                        throw std::invalid_argument("group order exceeds materialization cap");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    PermutationGroup g;
    g.degree_ = degree;
    g.elements_.assign(closure.begin(), closure.end());
    g.generators_ = gens;
    return g;
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) elements.push_back(Perm::identity(degree));
    auto is_member = [&](const Perm& p) {
        return std::binary_search(elements.begin(), elements.end(), p);
    };
    for (const auto& x : elements) {
        if (!is_member(x.inverse())) throw std::invalid_argument("element set not closed (inverse)");
    }
    // Greedy small generating set; closure verifies group-ness.
    std::vector<Perm> gens;
    PermutationGroup span = generated(degree, {}, elements.size());
    for (const auto& x : elements) {
        if (span.contains(x)) continue;
        gens.push_back(x);
        span = generated(degree, gens, elements.size() + 1);
    }
    if (span.order() != elements.size())
        throw std::invalid_argument("element set not closed under products");
    PermutationGroup g;
    g.degree_ = degree;
    g.elements_ = std::move(elements);
    g.generators_ = std::move(gens);
    return g;
}

bool PermutationGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

using ElemIndex = std::map<Perm, std::size_t>;

ElemIndex index_elements(const std::vector<Perm>& els) {
    ElemIndex idx;
    for (std::size_t i = 0; i < els.size(); ++i) idx[els[i]] = i;
    return idx;
}

// Conjugacy classes as sorted index lists.
std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<Perm>& els,
                                                        const ElemIndex& idx) {
    std::vector<bool> seen(els.size(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (seen[i]) continue;
        std::set<std::size_t> cls;
        for (const auto& g : els) {
            Perm conj = g.inverse().then(els[i]).then(g);
            cls.insert(idx.at(conj));
        }
        for (std::size_t j : cls) seen[j] = true;
        classes.emplace_back(cls.begin(), cls.end());
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens, std::size_t cap) {
    return PermutationGroup::generated(degree, gens, cap).elements();
}

// Closure if it stays within cap, nullopt otherwise.
std::optional<std::vector<Perm>> closure_up_to(int degree, const std::vector<Perm>& gens,
                                               std::size_t cap) {
    try {
        return subgroup_closure(degree, gens, cap);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Invariant factors of a finite abelian group presented by a closed element
// list (multiplication = permutation composition).
std::vector<std::size_t> abelian_invariant_factors(int degree, std::vector<Perm> els) {
    std::vector<std::size_t> factors;
    std::sort(els.begin(), els.end());
    while (els.size() > 1) {
        // element of maximal order
        std::size_t best = 0;
        int best_ord = 1;
        for (std::size_t i = 0; i < els.size(); ++i) {
            int o = els[i].order();
            if (o > best_ord) {
                best_ord = o;
                best = i;
            }
        }
        factors.push_back(static_cast<std::size_t>(best_ord));
        // quotient by <a>: keep one representative per coset
        std::vector<Perm> cyc = subgroup_closure(degree, {els[best]}, els.size());
        std::sort(cyc.begin(), cyc.end());
        std::set<std::vector<Perm>> cosets;
        std::vector<Perm> reps;
        for (const auto& x : els) {
            std::vector<Perm> coset;
            for (const auto& c : cyc) coset.push_back(x.then(c));
            std::sort(coset.begin(), coset.end());
            if (cosets.insert(coset).second) reps.push_back(coset.front());
        }
        // The quotient is again abelian; realize it on coset representatives
        // via the regular representation to keep using Perm machinery.
        std::vector<std::vector<Perm>> coset_list(cosets.begin(), cosets.end());
        std::sort(coset_list.begin(), coset_list.end());
        auto coset_of = [&](const Perm& x) {
            std::vector<Perm> coset;
            for (const auto& c : cyc) coset.push_back(x.then(c));
            std::sort(coset.begin(), coset.end());
            return static_cast<std::size_t>(
                std::lower_bound(coset_list.begin(), coset_list.end(), coset) -
                coset_list.begin());
        };
        std::vector<Perm> quotient;
        for (const auto& cs : coset_list) {
            std::vector<Vertex> img(coset_list.size());
            for (std::size_t j = 0; j < coset_list.size(); ++j)
                img[j] = static_cast<Vertex>(coset_of(coset_list[j].front().then(cs.front())));
            quotient.push_back(Perm(std::move(img)));
        }
        degree = static_cast<int>(coset_list.size());
        els = std::move(quotient);
        std::sort(els.begin(), els.end());
    }
    std::reverse(factors.begin(), factors.end()); // d1 | d2 | ... | dk
    return factors;
}

std::string classify_small_subgroup(int degree, const std::vector<Perm>& els) {
    const std::size_t n = els.size();
    for (const auto& x : els)
        if (static_cast<std::size_t>(x.order()) == n) return "cyclic";
    if (n == 4) return "klein_four";
    bool abelian = true;
    for (const auto& x : els)
        for (const auto& y : els)
            if (x.then(y) != y.then(x)) abelian = false;
    (void)degree;
    return abelian ? "abelian" : "other";
}

} // namespace

std::vector<std::vector<Perm>> normal_subgroups(const PermutationGroup& g) {
    const auto& els = g.elements();
    auto idx = index_elements(els);
    auto classes = conjugacy_classes(els, idx);
    const std::size_t nc = classes.size();

    // class index containing the identity
    std::size_t id_class = 0;
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t e : classes[c])
            if (els[e].is_identity()) id_class = c;

    // class product reachability: products of class c1 with class c2 meet
    // which classes (one representative of c1 against all of c2 suffices).
    std::vector<std::size_t> class_of(els.size());
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t e : classes[c]) class_of[e] = c;
    std::vector<std::vector<std::set<std::size_t>>> prod(nc,
                                                         std::vector<std::set<std::size_t>>(nc));
    for (std::size_t c1 = 0; c1 < nc; ++c1)
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
            const Perm& rep = els[classes[c1].front()];
            for (std::size_t e : classes[c2])
                prod[c1][c2].insert(class_of[idx.at(rep.then(els[e]))]);
        }

    if (nc > 63) throw std::invalid_argument("too many conjugacy classes");

    // Every normal subgroup is a product-closed union of classes containing
    // the identity class. Build the lattice by repeatedly joining one more
    // class and closing under class products.
    auto close = [&](std::uint64_t mask) {
        for (;;) {
            std::uint64_t grown = mask;
            for (std::size_t c1 = 0; c1 < nc; ++c1) {
                if (!(mask & (std::uint64_t{1} << c1))) continue;
                for (std::size_t c2 = 0; c2 < nc; ++c2) {
                    if (!(mask & (std::uint64_t{1} << c2))) continue;
                    for (std::size_t p : prod[c1][c2]) grown |= std::uint64_t{1} << p;
                }
            }
            if (grown == mask) return mask;
            mask = grown;
        }
    };

    std::set<std::uint64_t> found{std::uint64_t{1} << id_class};
    for (;;) {
        std::set<std::uint64_t> next = found;
        for (std::uint64_t mask : found)
            for (std::size_t c = 0; c < nc; ++c)
                if (!(mask & (std::uint64_t{1} << c)))
                    next.insert(close(mask | (std::uint64_t{1} << c)));
        if (next == found) break;
        found = std::move(next);
    }

    std::vector<std::vector<Perm>> out;
    for (std::uint64_t mask : found) {
        std::vector<Perm> sub;
        for (std::size_t c = 0; c < nc; ++c)
            if (mask & (std::uint64_t{1} << c))
                for (std::size_t e : classes[c]) sub.push_back(els[e]);
        std::sort(sub.begin(), sub.end());
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<PermutationGroup> index_two_subgroups(const PermutationGroup& g) {
    std::vector<PermutationGroup> out;
    for (const auto& sub : normal_subgroups(g)) {
        if (sub.size() * 2 != g.order()) continue;
        out.push_back(PermutationGroup::from_elements(g.degree(), sub));
    }
    return out;
}

GroupFingerprint analyze_group(const PermutationGroup& g, const SimplicialComplex* complex,
                               std::size_t cap) {
    if (g.order() > cap) throw std::invalid_argument("group order above analysis cap");
    GroupFingerprint fp;
    fp.order = g.order();
    const auto& els = g.elements();

    // center
    std::size_t center = 0;
    for (const auto& x : els) {
        bool central = true;
        for (const auto& gen : g.generators())
            if (x.then(gen) != gen.then(x)) { central = false; break; }
        if (central) ++center;
    }
    fp.center_order = center;

    // derived subgroup from all commutators
    std::set<Perm> comms;
    for (const auto& x : els)
        for (const auto& y : els)
            comms.insert(x.inverse().then(y.inverse()).then(x).then(y));
    auto derived = subgroup_closure(g.degree(), {comms.begin(), comms.end()}, g.order());
    fp.derived_order = derived.size();
    std::set<Perm> comms2;
    for (const auto& x : derived)
        for (const auto& y : derived)
            comms2.insert(x.inverse().then(y.inverse()).then(x).then(y));
    auto derived2 = subgroup_closure(g.degree(), {comms2.begin(), comms2.end()}, g.order());
    fp.derived_perfect = derived2.size() == derived.size() && derived.size() > 1;

    // abelianization G/G' via coset representatives
    {
        std::vector<Perm> dsorted = derived;
        std::sort(dsorted.begin(), dsorted.end());
        std::set<std::vector<Perm>> cosets;
        for (const auto& x : els) {
            std::vector<Perm> coset;
            for (const auto& d : dsorted) coset.push_back(x.then(d));
            std::sort(coset.begin(), coset.end());
            cosets.insert(std::move(coset));
        }
        std::vector<std::vector<Perm>> coset_list(cosets.begin(), cosets.end());
        std::sort(coset_list.begin(), coset_list.end());
        auto coset_of = [&](const Perm& x) {
            std::vector<Perm> coset;
            for (const auto& d : dsorted) coset.push_back(x.then(d));
            std::sort(coset.begin(), coset.end());
            return static_cast<std::size_t>(
                std::lower_bound(coset_list.begin(), coset_list.end(), coset) -
                coset_list.begin());
        };
        std::vector<Perm> quotient;
        for (const auto& cs : coset_list) {
            std::vector<Vertex> img(coset_list.size());
            for (std::size_t j = 0; j < coset_list.size(); ++j)
                img[j] = static_cast<Vertex>(coset_of(coset_list[j].front().then(cs.front())));
            quotient.push_back(Perm(std::move(img)));
        }
        fp.abelianization =
            abelian_invariant_factors(static_cast<int>(coset_list.size()), quotient);
    }

    // normal subgroup orders and semidirect certificates
    auto normals = normal_subgroups(g);
    for (const auto& n : normals) fp.normal_subgroup_orders.push_back(n.size());
    std::sort(fp.normal_subgroup_orders.begin(), fp.normal_subgroup_orders.end());

    for (const auto& n : normals) {
        if (n.size() == 1 || n.size() == g.order()) continue;
        const std::size_t h = g.order() / n.size();
        auto in_normal = [&](const Perm& p) {
            return std::binary_search(n.begin(), n.end(), p);
        };
        auto trivial_intersection = [&](const std::vector<Perm>& sub) {
            for (const auto& x : sub)
                if (!x.is_identity() && in_normal(x)) return false;
            return true;
        };
        std::optional<std::vector<Perm>> complement;
        // cyclic complements
        for (const auto& x : els) {
            if (static_cast<std::size_t>(x.order()) != h) continue;
            auto sub = subgroup_closure(g.degree(), {x}, g.order());
            if (sub.size() == h && trivial_intersection(sub)) {
                complement = sub;
                break;
            }
        }
        // 2-generated complements (covers Klein-four and other small cases)
        if (!complement && h <= 12) {
            for (std::size_t i = 0; i < els.size() && !complement; ++i) {
                if (els[i].is_identity() || static_cast<std::size_t>(els[i].order()) > h)
                    continue;
                for (std::size_t j = i + 1; j < els.size() && !complement; ++j) {
                    if (els[j].is_identity() || static_cast<std::size_t>(els[j].order()) > h)
                        continue;
                    auto sub = closure_up_to(g.degree(), {els[i], els[j]}, h);
                    if (sub && sub->size() == h && trivial_intersection(*sub)) complement = *sub;
                }
            }
        }
        if (complement) {
            SemidirectCertificate cert;
            cert.normal_order = n.size();
            cert.complement_order = h;
            cert.normal_elements = n;
            std::sort(complement->begin(), complement->end());
            cert.complement_elements = *complement;
            cert.complement_structure = classify_small_subgroup(g.degree(), *complement);
            fp.semidirect_certificates.push_back(std::move(cert));
        }
    }

    if (complex) {
        auto support = complex->support();
        std::set<Vertex> orbit;
        if (!support.empty()) {
            orbit.insert(support.front());
            for (const auto& x : els)
                orbit.insert(x(support.front()));
        }
        fp.vertex_transitive = orbit.size() == support.size() && !support.empty();

        const auto& edges = complex->faces(1);
        if (!edges.empty()) {
            std::set<Simplex> eorbit;
            for (const auto& x : els) eorbit.insert(edges.front().mapped(x.images()));
            fp.edge_transitive = eorbit.size() == edges.size();
        }
    }
    return fp;
}

} // namespace cyctri
