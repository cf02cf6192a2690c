#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyctri/bistellar.hpp"
#include "cyctri/collapse.hpp"
#include "cyctri/complex.hpp"

namespace cyctri {

enum class Verdict { sphere, not_sphere, unknown };
enum class CertMethod { cycle_check, ball_union, bistellar, homology_refute, disconnected_refute };

std::string to_string(Verdict v);
std::string to_string(CertMethod m);

/// Replayable certificate for a sphere check.
struct SphereCertificate {
    Verdict verdict = Verdict::unknown;
    CertMethod method = CertMethod::cycle_check;
    std::string detail; // human-readable summary

    // ball_union witness
    std::vector<Vertex> part_a, part_b;
    std::vector<CollapseStep> collapse_a, collapse_b;
    // bistellar witness
    std::vector<BistellarMove> flips;
    // refutation witness
    std::optional<Simplex> offending;
    std::vector<Vertex> pinches; // vertices whose link is not a single cycle
    std::optional<long long> chi;
};

/// 2-sphere test for a pure 2-complex: connected, every vertex link a
/// single closed cycle, chi = 2. Negative certificates name the offenders.
SphereCertificate is_sphere_2(const SimplicialComplex& c);

/// 1-sphere (single closed cycle) test for a 1-complex.
SphereCertificate is_circle(const SimplicialComplex& c);

struct BallUnionStrategy {
    std::vector<Vertex> part_a, part_b;
};
struct BistellarStrategy {
    int budget = 5000;
    std::uint32_t seed = 0;
};
struct AutoStrategy {
    int budget = 5000;
    std::uint32_t seed = 0;
};
using SphereStrategy = std::variant<AutoStrategy, BallUnionStrategy, BistellarStrategy>;

/// 3-sphere test for a pure 3-complex.
///  - ball_union: both vertex spans collapsible in a closed 3-manifold
///    (the two derived neighborhoods are balls glued along their common
///    boundary);
///  - bistellar: reduce to the boundary of the 4-simplex within budget;
///  - auto: closed-3-manifold pre-check, homology refutation, then bistellar.
/// Budget exhaustion yields `unknown`, never a wrong verdict.
SphereCertificate is_sphere_3(const SimplicialComplex& c, const SphereStrategy& strategy);

/// Independently re-verifies a certificate against the complex it was
/// issued for (re-collapse, re-flip, or re-check the named witness).
bool replay_certificate(const SimplicialComplex& c, const SphereCertificate& cert);

} // namespace cyctri
