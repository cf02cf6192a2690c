#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyctri/enumerate.hpp"
#include "cyctri/group.hpp"
#include "cyctri/homology.hpp"
#include "cyctri/isomorphism.hpp"
#include "cyctri/verify.hpp"

namespace cyctri::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "cyctri-report/1";

/// All renderers are deterministic: fixed key order (json sorts keys) and
/// fixed line order in text mode; base-12 vertex labels throughout.

json facets_json(const SimplicialComplex& c);
std::string facets_text(const SimplicialComplex& c);

json candidates_json(const std::vector<Candidate>& cands);
std::string candidates_text(const std::vector<Candidate>& cands);

json verification_json(const VerificationReport& r, const SingularLocus* locus, bool witness);
std::string verification_text(const VerificationReport& r, const SingularLocus* locus,
                              bool witness);

struct AutReport {
    PermutationGroup group;
    GroupFingerprint fingerprint;
    std::vector<int> multipliers; // empty when the shift is not an automorphism
};

json aut_json(const AutReport& r);
std::string aut_text(const AutReport& r);

struct HomologyReport {
    HomologyProfile profile;
    bool orientable = false;
    bool has_form = false;
    FormClass form;
    std::string form_note; // why the form is missing, when it is
};

json homology_json(const HomologyReport& r);
std::string homology_text(const HomologyReport& r);

json iso_json(const IsoResult& r);
std::string iso_text(const IsoResult& r);

} // namespace cyctri::report
