#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cyctri/simplex.hpp"

namespace cyctri {

/// Permutation of 0..degree-1 stored as an image table.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<Vertex> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    Vertex operator()(Vertex v) const { return img_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& images() const { return img_; }

    Perm then(const Perm& second) const; // apply *this first, then second
    Perm inverse() const;
    bool is_identity() const;
    int order() const;

    /// Disjoint-cycle notation over base-12 style labels, fixed points
    /// omitted: "(1,5)(2,a)(4,8)(7,b)"; "()" for the identity.
    std::string cycle_str() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<Vertex> img_;
};

/// Parses disjoint-cycle notation, e.g. "(1,5)(2,a)(4,8)(7,b)".
Perm perm_from_cycles(const std::string& s, int degree);

} // namespace cyctri
