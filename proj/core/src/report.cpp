#include "cyctri/report.hpp"

#include <sstream>

namespace cyctri::report {

namespace {

std::string fvec_str(const FVector& f) { return f.str(); }

json cert_json(const SphereCertificate& cert, bool witness) {
    json j;
    j["verdict"] = to_string(cert.verdict);
    j["method"] = to_string(cert.method);
    j["detail"] = cert.detail;
    if (cert.offending) j["offending"] = cert.offending->str();
    if (cert.chi) j["chi"] = *cert.chi;
    if (!cert.pinches.empty()) {
        std::string p;
        for (Vertex v : cert.pinches) p.push_back(vertex_label(v));
        j["pinch_vertices"] = p;
    }
    if (witness) {
        if (cert.method == CertMethod::ball_union) {
            auto part = [](const std::vector<Vertex>& vs) {
                std::string s;
                for (Vertex v : vs) s.push_back(vertex_label(v));
                return s;
            };
            j["witness"]["part_a"] = part(cert.part_a);
            j["witness"]["part_b"] = part(cert.part_b);
            auto steps = [](const std::vector<CollapseStep>& seq) {
                json arr = json::array();
                for (const auto& [free, coface] : seq)
                    arr.push_back(free.str() + "<" + coface.str());
                return arr;
            };
            j["witness"]["collapse_a"] = steps(cert.collapse_a);
            j["witness"]["collapse_b"] = steps(cert.collapse_b);
        }
        if (cert.method == CertMethod::bistellar && !cert.flips.empty()) {
            json arr = json::array();
            for (const auto& m : cert.flips)
                arr.push_back(std::to_string(m.kind) + ":" + m.pivot.str());
            j["witness"]["flips"] = arr;
        }
    }
    return j;
}

std::string cert_text(const SphereCertificate& cert) {
    std::ostringstream os;
    os << to_string(cert.verdict) << " [" << to_string(cert.method) << "]";
    if (!cert.detail.empty()) os << " " << cert.detail;
    return os.str();
}

std::string surface_text(const SingularSurface& s) {
    std::ostringstream os;
    os << "surface";
    if (!s.generators.empty()) {
        os << " <";
        for (std::size_t i = 0; i < s.generators.size(); ++i)
            os << (i ? "," : "") << s.generators[i].str();
        os << ">";
    }
    os << " triangles=" << s.triangles.size();
    const auto& c = s.cls;
    if (!c.is_surface) {
        os << " not-a-surface (" << c.defect << ")";
        return os.str();
    }
    os << " chi=" << c.chi << (c.closed ? " closed" : " with-boundary")
       << (c.connected ? " connected" : " disconnected")
       << (c.orientable ? " orientable" : " non-orientable");
    if (c.is_torus()) os << " torus";
    if (c.is_sphere()) os << " sphere";
    if (c.is_mobius()) os << " mobius";
    return os.str();
}

json surface_json(const SingularSurface& s) {
    json j;
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(g.str());
    j["generators"] = gens;
    json tris = json::array();
    for (const auto& t : s.triangles) tris.push_back(t.str());
    j["triangles"] = tris;
    j["is_surface"] = s.cls.is_surface;
    if (s.cls.is_surface) {
        j["chi"] = s.cls.chi;
        j["closed"] = s.cls.closed;
        j["connected"] = s.cls.connected;
        j["orientable"] = s.cls.orientable;
        j["torus"] = s.cls.is_torus();
    } else {
        j["defect"] = s.cls.defect;
    }
    return j;
}

} // namespace

json facets_json(const SimplicialComplex& c) {
    json j;
    j["schema"] = kSchema;
    j["n"] = c.n();
    j["d"] = c.dim();
    json arr = json::array();
    for (const auto& f : c.top_faces()) arr.push_back(f.str());
    j["facets"] = arr;
    return j;
}

std::string facets_text(const SimplicialComplex& c) {
    std::ostringstream os;
    for (const auto& f : c.top_faces()) os << f.str() << "\n";
    return os.str();
}

json candidates_json(const std::vector<Candidate>& cands) {
    json j;
    j["schema"] = kSchema;
    json arr = json::array();
    for (const auto& c : cands) {
        json jc;
        json cycles = json::array();
        for (const auto& cyc : c.cycles) cycles.push_back(cyc.str());
        jc["cycles"] = cycles;
        json trace;
        for (const auto& [f, pass] : c.filter_trace) trace[to_string(f)] = pass;
        jc["filters"] = trace;
        jc["f_vector"] = c.complex.f_vector().str();
        arr.push_back(jc);
    }
    j["candidates"] = arr;
    return j;
}

std::string candidates_text(const std::vector<Candidate>& cands) {
    std::ostringstream os;
    os << "# " << cands.size() << " candidate" << (cands.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < cands.size(); ++i) {
        os << "candidate " << (i + 1) << "\n";
        for (const auto& cyc : cands[i].cycles) os << cyc.str() << "\n";
        os << "filters:";
        for (const auto& [f, pass] : cands[i].filter_trace)
            os << ' ' << to_string(f) << '=' << (pass ? "pass" : "fail");
        os << "\n\n";
    }
    return os.str();
}

json verification_json(const VerificationReport& r, const SingularLocus* locus, bool witness) {
    json j;
    j["schema"] = kSchema;
    j["dim"] = r.dim;
    j["f_vector"] = fvec_str(r.fvec);
    j["closed"] = r.pseudo.closed;
    j["strongly_connected"] = r.pseudo.strongly_connected;
    j["transitivity_used"] = r.used_transitivity;
    j["manifold"] = to_string(r.is_manifold);
    j["eulerian"] = r.eulerian;
    json verdicts = json::array();
    for (const auto& lv : r.link_verdicts) {
        json v;
        v["face"] = lv.face.str();
        v["orbit_size"] = lv.orbit_size;
        v["certificate"] = cert_json(lv.cert, witness);
        verdicts.push_back(v);
    }
    j["link_verdicts"] = verdicts;
    json singular = json::array();
    for (const auto& s : r.singular_faces) singular.push_back(s.str());
    j["singular_faces"] = singular;
    if (locus) {
        json surfaces = json::array();
        for (const auto& s : locus->surfaces) surfaces.push_back(surface_json(s));
        j["singular_surfaces"] = surfaces;
    }
    return j;
}

std::string verification_text(const VerificationReport& r, const SingularLocus* locus,
                              bool witness) {
    std::ostringstream os;
    os << "f-vector: " << fvec_str(r.fvec) << "\n";
    os << "closed: " << (r.pseudo.closed ? "yes" : "no") << "\n";
    os << "strongly-connected: " << (r.pseudo.strongly_connected ? "yes" : "no") << "\n";
    os << "transitivity: " << (r.used_transitivity ? "orbit representatives" : "all faces")
       << "\n";
    os << "eulerian: " << (r.eulerian ? "yes" : "no") << "\n";
    os << "manifold: " << to_string(r.is_manifold) << "\n";
    os << "link verdicts:\n";
    for (const auto& lv : r.link_verdicts) {
        os << "  dim " << lv.face.dim() << " <" << lv.face.str() << "> x" << lv.orbit_size
           << ": " << cert_text(lv.cert) << "\n";
        if (witness && lv.cert.method == CertMethod::bistellar &&
            lv.cert.verdict == Verdict::sphere)
            os << "    flips: " << lv.cert.flips.size() << " recorded\n";
    }
    if (r.singular_faces.empty()) {
        os << "singular faces: none\n";
    } else {
        os << "singular faces (" << r.singular_faces.size() << "):";
        for (const auto& s : r.singular_faces) os << ' ' << s.str();
        os << "\n";
    }
    if (locus && !locus->surfaces.empty()) {
        os << "singular locus:\n";
        for (const auto& s : locus->surfaces) os << "  " << surface_text(s) << "\n";
    }
    return os.str();
}

json aut_json(const AutReport& r) {
    json j;
    j["schema"] = kSchema;
    j["order"] = r.group.order();
    json gens = json::array();
    for (const auto& g : r.group.generators()) gens.push_back(g.cycle_str());
    j["generators"] = gens;
    const auto& fp = r.fingerprint;
    j["vertex_transitive"] = fp.vertex_transitive;
    j["edge_transitive"] = fp.edge_transitive;
    j["center_order"] = fp.center_order;
    j["derived_order"] = fp.derived_order;
    j["derived_perfect"] = fp.derived_perfect;
    j["abelianization"] = fp.abelianization;
    j["normal_subgroup_orders"] = fp.normal_subgroup_orders;
    json certs = json::array();
    for (const auto& c : fp.semidirect_certificates) {
        json jc;
        jc["normal_order"] = c.normal_order;
        jc["complement_order"] = c.complement_order;
        jc["complement_structure"] = c.complement_structure;
        certs.push_back(jc);
    }
    j["semidirect_certificates"] = certs;
    j["multipliers"] = r.multipliers;
    return j;
}

std::string aut_text(const AutReport& r) {
    std::ostringstream os;
    os << "order: " << r.group.order() << "\n";
    os << "generators:\n";
    for (const auto& g : r.group.generators()) os << "  " << g.cycle_str() << "\n";
    const auto& fp = r.fingerprint;
    os << "vertex-transitive: " << (fp.vertex_transitive ? "yes" : "no") << "\n";
    os << "edge-transitive: " << (fp.edge_transitive ? "yes" : "no") << "\n";
    os << "center: " << fp.center_order << "\n";
    os << "derived: " << fp.derived_order << (fp.derived_perfect ? " (perfect)" : "") << "\n";
    os << "abelianization:";
    if (fp.abelianization.empty()) os << " trivial";
    for (auto d : fp.abelianization) os << " C" << d;
    os << "\n";
    os << "normal subgroup orders: {";
    for (std::size_t i = 0; i < fp.normal_subgroup_orders.size(); ++i)
        os << (i ? "," : "") << fp.normal_subgroup_orders[i];
    os << "}\n";
    for (const auto& c : fp.semidirect_certificates)
        os << "semidirect: (" << c.normal_order << "," << c.complement_order << ") complement "
           << c.complement_structure << "\n";
    os << "multipliers:";
    if (r.multipliers.empty()) os << " (shift not an automorphism)";
    for (int m : r.multipliers) os << ' ' << m;
    os << "\n";
    return os.str();
}

json homology_json(const HomologyReport& r) {
    json j;
    j["schema"] = kSchema;
    j["betti"] = r.profile.betti;
    json tors = json::array();
    for (const auto& t : r.profile.torsion) {
        json dim = json::array();
        for (const auto& f : t) dim.push_back(f.str());
        tors.push_back(dim);
    }
    j["torsion"] = tors;
    j["chi"] = r.profile.chi;
    j["orientable"] = r.orientable;
    if (r.has_form) {
        json form;
        json gram = json::array();
        for (std::size_t i = 0; i < r.form.gram.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < r.form.gram.cols(); ++k)
                row.push_back(r.form.gram.at(i, k).str());
            gram.push_back(row);
        }
        form["gram"] = gram;
        form["rank"] = r.form.rank;
        form["parity"] = r.form.even ? "even" : "odd";
        form["signature"] = r.form.signature;
        j["intersection_form"] = form;
    } else if (!r.form_note.empty()) {
        j["intersection_form_note"] = r.form_note;
    }
    return j;
}

std::string homology_text(const HomologyReport& r) {
    std::ostringstream os;
    os << "betti: (";
    for (std::size_t i = 0; i < r.profile.betti.size(); ++i)
        os << (i ? "," : "") << r.profile.betti[i];
    os << ")\n";
    os << "torsion:";
    bool any = false;
    for (std::size_t k = 0; k < r.profile.torsion.size(); ++k)
        for (const auto& f : r.profile.torsion[k]) {
            os << " H" << k << ":Z/" << f.str();
            any = true;
        }
    os << (any ? "\n" : " none\n");
    os << "chi: " << r.profile.chi << "\n";
    os << "orientable: " << (r.orientable ? "yes" : "no") << "\n";
    if (r.has_form) {
        os << "intersection form:\n";
        os << "  gram:";
        for (std::size_t i = 0; i < r.form.gram.rows(); ++i) {
            os << " [";
            for (std::size_t k = 0; k < r.form.gram.cols(); ++k)
                os << (k ? " " : "") << r.form.gram.at(i, k).str();
            os << "]";
        }
        os << "\n";
        os << "  rank: " << r.form.rank << "\n";
        os << "  parity: " << (r.form.even ? "even" : "odd") << "\n";
        os << "  signature: " << r.form.signature << "\n";
    } else if (!r.form_note.empty()) {
        os << "intersection form: not computed (" << r.form_note << ")\n";
    }
    return os.str();
}

json iso_json(const IsoResult& r) {
    json j;
    j["schema"] = kSchema;
    j["isomorphic"] = r.isomorphic();
    if (r.bijection) {
        json b;
        for (auto [v, w] : *r.bijection)
            b[std::string(1, vertex_label(v))] = std::string(1, vertex_label(w));
        j["bijection"] = b;
    } else {
        j["refutation"] = r.refutation;
    }
    return j;
}

std::string iso_text(const IsoResult& r) {
    std::ostringstream os;
    os << "isomorphic: " << (r.isomorphic() ? "yes" : "no") << "\n";
    if (r.bijection) {
        os << "bijection:";
        for (auto [v, w] : *r.bijection)
            os << ' ' << vertex_label(v) << "->" << vertex_label(w);
        os << "\n";
    } else {
        os << "refutation: " << r.refutation << "\n";
    }
    return os.str();
}

} // namespace cyctri::report
