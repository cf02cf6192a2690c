#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyctri/complex.hpp"
#include "cyctri/permutation.hpp"

namespace cyctri {

/// Finite permutation group with materialized elements (orders here are
/// tiny; the cap guards against runaway closures).
class PermutationGroup {
public:
    PermutationGroup() = default;

    static PermutationGroup generated(int degree, const std::vector<Perm>& gens,
                                      std::size_t cap = 10000);
    /// Wraps an element list that is already a group (verified).
    static PermutationGroup from_elements(int degree, std::vector<Perm> elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    bool contains(const Perm& p) const;

private:
    int degree_ = 0;
    std::vector<Perm> elements_;   // sorted
    std::vector<Perm> generators_; // small generating set
};

struct SemidirectCertificate {
    std::size_t normal_order = 0;
    std::size_t complement_order = 0;
    std::vector<Perm> normal_elements;     // sorted
    std::vector<Perm> complement_elements; // sorted
    std::string complement_structure;      // "cyclic" / "klein_four" / "other"
};

struct GroupFingerprint {
    std::size_t order = 0;
    bool vertex_transitive = false;
    bool edge_transitive = false;
    std::size_t center_order = 0;
    std::size_t derived_order = 0;
    bool derived_perfect = false;
    std::vector<std::size_t> abelianization;          // invariant factors d1 | d2 | ...
    std::vector<std::size_t> normal_subgroup_orders;  // sorted multiset
    std::vector<SemidirectCertificate> semidirect_certificates;
};

/// Structural fingerprint via materialized elements and conjugacy classes.
/// Transitivity flags refer to the action on `complex` (when given).
GroupFingerprint analyze_group(const PermutationGroup& g,
                               const SimplicialComplex* complex = nullptr,
                               std::size_t cap = 10000);

/// All normal subgroups (unions of conjugacy classes closed under the
/// operation), as sorted element lists.
std::vector<std::vector<Perm>> normal_subgroups(const PermutationGroup& g);

/// Subgroups of index 2 (they all contain the derived subgroup).
std::vector<PermutationGroup> index_two_subgroups(const PermutationGroup& g);

} // namespace cyctri
