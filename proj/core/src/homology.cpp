#include "cyctri/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyctri {

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k <= 0 || k > c.dim()) return IntegerMatrix(0, c.face_count(std::max(k, 0)));
    const auto& rows = c.faces(k - 1);
    const auto& cols = c.faces(k);
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s.drop(i);
            auto idx = c.index_of(face);
            if (!idx) throw std::logic_error("complex not downward closed");
            m.at(*idx, j) = sign;
            sign = -sign;
        }
    }
    return m;
}

bool HomologyProfile::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyProfile homology(const SimplicialComplex& c) {
    HomologyProfile p;
    const int d = c.dim();
    if (d < 0) return p;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d) + 2, 0);
    std::vector<std::vector<Int>> factors(static_cast<std::size_t>(d) + 2);
    for (int k = 1; k <= d; ++k) {
        SmithResult s = smith_normal_form(boundary_matrix(c, k));
        ranks[static_cast<std::size_t>(k)] = s.rank;
        factors[static_cast<std::size_t>(k)] = s.invariant_factors();
    }
    p.betti.resize(static_cast<std::size_t>(d) + 1);
    p.torsion.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        auto ku = static_cast<std::size_t>(k);
        p.betti[ku] = static_cast<long long>(c.face_count(k)) -
                      static_cast<long long>(ranks[ku]) -
                      static_cast<long long>(ranks[ku + 1]);
        for (const auto& f : factors[ku + 1])
            if (f > 1) p.torsion[ku].push_back(f);
    }
    long long chi = 0, sign = 1;
    for (long long b : p.betti) {
        chi += sign * b;
        sign = -sign;
    }
    p.chi = chi;
    return p;
}

std::optional<std::vector<int>> orient(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d < 0) return std::vector<int>{};
    if (!c.is_pure()) throw std::invalid_argument("orient expects a pure complex");
    const auto& tops = c.top_faces();

    // ridge -> incident (facet index, drop position)
    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    for (std::size_t f = 0; f < tops.size(); ++f)
        for (std::size_t i = 0; i < tops[f].size(); ++i)
            ridges[tops[f].drop(i)].emplace_back(f, i);
    for (const auto& [r, inc] : ridges)
        if (inc.size() > 2) throw std::invalid_argument("ridge of degree > 2, cannot orient");

    std::vector<int> sign(tops.size(), 0);
    for (std::size_t seed = 0; seed < tops.size(); ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::vector<std::size_t> stack{seed};
        while (!stack.empty()) {
            std::size_t f = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < tops[f].size(); ++i) {
                const auto& inc = ridges.at(tops[f].drop(i));
                if (inc.size() != 2) continue;
                auto [g, j] = inc[0].first == f && inc[0].second == i ? inc[1] : inc[0];
                // Incidence signs (-1)^i and (-1)^j must cancel.
                int needed = -sign[f] * ((i % 2 == 0) ? 1 : -1) * ((j % 2 == 0) ? 1 : -1);
                if (sign[g] == 0) {
                    sign[g] = needed;
                    stack.push_back(g);
                } else if (sign[g] != needed) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

namespace {

/// Quotient Z^k / im(Y): lifts of a basis of the free part, plus torsion.
struct QuotientFree {
    IntegerMatrix free_lifts; // k x b, columns are coordinate vectors in Z^k
    std::vector<Int> torsion; // invariant factors > 1
};

QuotientFree quotient_free_part(const IntegerMatrix& y) {
    SmithResult s = smith_normal_form(y, true);
    // w = U v are new coordinates; quotient is direct sum of Z/e_i and Z^{k-rank}.
    IntegerMatrix uinv = inverse_unimodular(s.u);
    const std::size_t k = y.rows();
    QuotientFree q;
    q.free_lifts = IntegerMatrix(k, k - s.rank);
    for (std::size_t j = 0; j < k - s.rank; ++j)
        for (std::size_t i = 0; i < k; ++i)
            q.free_lifts.at(i, j) = uinv.at(i, s.rank + j);
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) q.torsion.push_back(s.d.at(i, i));
    return q;
}

/// Cocycle representatives of a basis of the free part of
/// H^2 = ker(delta^2) / im(delta^1); throws if H^2 has torsion.
IntegerMatrix h2_cocycle_basis(const SimplicialComplex& c) {
    IntegerMatrix delta2 = boundary_matrix(c, 3).transposed(); // C^2 -> C^3
    IntegerMatrix delta1 = boundary_matrix(c, 2).transposed(); // C^1 -> C^2
    IntegerMatrix kernel = kernel_basis(delta2);               // f2 x k

    // Express the coboundaries in kernel coordinates.
    auto y = solve(kernel, delta1);
    if (!y) throw std::logic_error("coboundaries not contained in cocycles");
    QuotientFree q = quotient_free_part(*y);
    if (!q.torsion.empty()) throw std::invalid_argument("H^2 has torsion");
    return kernel * q.free_lifts; // f2 x b2
}

struct FundamentalClass {
    std::vector<int> sign;                  // per facet
    std::vector<std::size_t> front, back;   // face indices of AW front/back 2-faces
};

FundamentalClass fundamental_class(const SimplicialComplex& c) {
    if (c.dim() != 4) throw std::invalid_argument("intersection form expects a 4-complex");
    for (const auto& r : c.faces(3))
        if (c.top_degree(r) != 2) throw std::invalid_argument("complex is not closed");
    auto signs = orient(c);
    if (!signs) throw std::invalid_argument("complex is not orientable");

    FundamentalClass fc;
    fc.sign = *signs;
    const auto& tops = c.top_faces();
    for (const auto& f : tops) {
        const auto& v = f.vertices();
        Simplex front(std::vector<Vertex>{v[0], v[1], v[2]});
        Simplex back(std::vector<Vertex>{v[2], v[3], v[4]});
        fc.front.push_back(*c.index_of(front));
        fc.back.push_back(*c.index_of(back));
    }

    // Connectivity of the facet graph: a fundamental class of several
    // components would not represent a single manifold.
    // The dual graph is connected iff orient() visited everything from facet 0;
    // check via homology-free flood fill on shared ridges.
    std::map<Simplex, std::vector<std::size_t>> ridge_map;
    for (std::size_t f = 0; f < tops.size(); ++f)
        for (std::size_t i = 0; i < tops[f].size(); ++i) ridge_map[tops[f].drop(i)].push_back(f);
    std::vector<bool> seen(tops.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < tops[f].size(); ++i)
            for (std::size_t g : ridge_map[tops[f].drop(i)])
                if (!seen[g]) {
                    seen[g] = true;
                    stack.push_back(g);
                }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::invalid_argument("complex is not strongly connected");
    return fc;
}

} // namespace

long long symmetric_signature(const IntegerMatrix& gram) {
    const std::size_t n = gram.rows();
    if (n != gram.cols()) throw std::invalid_argument("signature of non-square matrix");
    // Characteristic polynomial by Faddeev-LeVerrier (exact over Z).
    std::vector<Int> coeff(n + 1);
    coeff[0] = 1;
    IntegerMatrix m(n, n);
    IntegerMatrix acc = IntegerMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = gram * acc;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        coeff[k] = -tr / static_cast<long long>(k);
        acc = m;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += coeff[k];
    }
    // p(x) = sum coeff[i] x^{n-i}; all roots real (symmetric matrix), so
    // Descartes' sign-variation count is exact.
    auto variations = [&](bool negate) {
        int var = 0, last = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            Int c = coeff[i];
            if (negate && (n - i) % 2 == 1) c = -c;
            if (c == 0) continue;
            int s = c > 0 ? 1 : -1;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    };
    return variations(false) - variations(true);
}

FormClass intersection_form(const SimplicialComplex& c) {
    IntegerMatrix z = h2_cocycle_basis(c);    // f2 x r
    FundamentalClass fc = fundamental_class(c);

    const std::size_t r = z.cols();
    FormClass form;
    form.gram = IntegerMatrix(r, r);
    for (std::size_t f = 0; f < fc.sign.size(); ++f) {
        for (std::size_t i = 0; i < r; ++i) {
            const Int& zi = z.at(fc.front[f], i);
            if (zi == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
                form.gram.at(i, j) += fc.sign[f] * zi * z.at(fc.back[f], j);
        }
    }
    if (form.gram != form.gram.transposed())
        throw std::logic_error("cup-product Gram matrix is not symmetric");

    form.rank = rank(form.gram);
    form.even = true;
    for (std::size_t i = 0; i < r; ++i)
        if (form.gram.at(i, i) % 2 != 0) form.even = false;
    form.signature = symmetric_signature(form.gram);
    return form;
}

H2Pairing h2_pairing(const SimplicialComplex& c) {
    IntegerMatrix d2 = boundary_matrix(c, 2);
    IntegerMatrix d3 = boundary_matrix(c, 3);
    IntegerMatrix kernel = kernel_basis(d2); // f2 x k

    auto y = solve(kernel, d3);
    if (!y) throw std::logic_error("boundaries not contained in cycles");
    QuotientFree q = quotient_free_part(*y);
    if (!q.torsion.empty()) throw std::invalid_argument("H_2 has torsion");

    H2Pairing p;
    p.cycle_basis = kernel * q.free_lifts; // f2 x r

    IntegerMatrix z = h2_cocycle_basis(c); // f2 x r
    FundamentalClass fc = fundamental_class(c);
    const std::size_t r = z.cols();
    if (p.cycle_basis.cols() != r) throw std::logic_error("H^2 and H_2 rank mismatch");

    // Evaluation pairing E_ij = <z_i, b_j> (unimodular for torsion-free groups).
    IntegerMatrix eval(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int s = 0;
            for (std::size_t t = 0; t < static_cast<std::size_t>(c.face_count(2)); ++t)
                s += z.at(t, i) * p.cycle_basis.at(t, j);
            eval.at(i, j) = s;
        }

    // Cap products z_j ^ mu as 2-cycles, then their classes: the matrix of
    // Poincare duality in these bases.
    IntegerMatrix caps(c.face_count(2), r);
    for (std::size_t f = 0; f < fc.sign.size(); ++f)
        for (std::size_t j = 0; j < r; ++j) {
            const Int& zb = z.at(fc.back[f], j);
            if (zb != 0) caps.at(fc.front[f], j) += fc.sign[f] * zb;
        }
    // Express caps in homology coordinates: caps = cycle_basis * X + d3 * W.
    IntegerMatrix stacked(c.face_count(2), r + d3.cols());
    for (std::size_t i = 0; i < c.face_count(2); ++i) {
        for (std::size_t j = 0; j < r; ++j) stacked.at(i, j) = p.cycle_basis.at(i, j);
        for (std::size_t j = 0; j < d3.cols(); ++j) stacked.at(i, r + j) = d3.at(i, j);
    }
    auto sol = solve(stacked, caps);
    if (!sol) throw std::logic_error("cap products are not cycles");
    IntegerMatrix pd(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) pd.at(i, j) = sol->at(i, j);

    // Intersection matrix on H_2 in the b-basis: P^{-T} E, from
    // u.v = <PD^{-1}u cup PD^{-1}v, mu> and Gram = E P.
    p.intersection = inverse_unimodular(pd).transposed() * eval;
    if (p.intersection != p.intersection.transposed())
        throw std::logic_error("H_2 intersection matrix is not symmetric");
    return p;
}

std::optional<std::vector<Int>> h2_class_of(const SimplicialComplex& c, const H2Pairing& p,
                                            const IntegerMatrix& cycle) {
    IntegerMatrix d2 = boundary_matrix(c, 2);
    if (!(d2 * cycle).is_zero()) return std::nullopt;
    IntegerMatrix d3 = boundary_matrix(c, 3);
    const std::size_t r = p.cycle_basis.cols();
    IntegerMatrix stacked(c.face_count(2), r + d3.cols());
    for (std::size_t i = 0; i < c.face_count(2); ++i) {
        for (std::size_t j = 0; j < r; ++j) stacked.at(i, j) = p.cycle_basis.at(i, j);
        for (std::size_t j = 0; j < d3.cols(); ++j) stacked.at(i, r + j) = d3.at(i, j);
    }
    auto sol = solve(stacked, cycle);
    if (!sol) return std::nullopt;
    std::vector<Int> coords(r);
    for (std::size_t i = 0; i < r; ++i) coords[i] = sol->at(i, 0);
    return coords;
}

IntegerMatrix surface_cycle(const SimplicialComplex& c, const SimplicialComplex& surface) {
    if (surface.dim() != 2 || !surface.is_pure())
        throw std::invalid_argument("surface_cycle expects a pure 2-complex");
    auto signs = orient(surface);
    if (!signs) throw std::invalid_argument("surface is not orientable");
    for (const auto& e : surface.faces(1))
        if (surface.top_degree(e) != 2)
            throw std::invalid_argument("surface is not closed");
    IntegerMatrix cycle(c.face_count(2), 1);
    const auto& tris = surface.top_faces();
    for (std::size_t t = 0; t < tris.size(); ++t) {
        auto idx = c.index_of(tris[t]);
        if (!idx) throw std::invalid_argument("surface triangle not a face of the complex");
        cycle.at(*idx, 0) = (*signs)[t];
    }
    return cycle;
}

} // namespace cyctri
