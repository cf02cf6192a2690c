#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cyctri/simplex.hpp"

namespace cyctri {

/// Difference cycle (y_1,...,y_{d+1}) mod n: positive residue gaps summing
/// to n. Generates the C_n-orbit of the d-simplex {x, x+y_1, x+y_1+y_2, ...}.
/// Always stored in canonical form, the lexicographically least rotation.
/// Rotations describe the same orbit; the reversed sequence does not (it is
/// the image under the multiplier -1 and may generate a different orbit).
class DifferenceCycle {
public:
    DifferenceCycle() = default;

    /// Validates (positive entries, sum == n) and canonicalizes.
    static DifferenceCycle make(std::vector<int> entries, int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(entries_.size()) - 1; }
    const std::vector<int>& entries() const { return entries_; }

    /// Number of distinct simplices in the generated orbit:
    /// n divided by the order of the rotation stabilizer of the entry word.
    int orbit_length() const;

    /// The generated orbit, sorted, duplicates merged.
    std::vector<Simplex> expand() const;

    /// The simplex with base vertex x.
    Simplex simplex_at(int x) const;

    /// Entry word reversed (= orbit image under v -> -v), re-canonicalized.
    DifferenceCycle reversed() const;

    /// Gap sequence of a simplex around Z_n, canonicalized.
    static DifferenceCycle of_simplex(const Simplex& s, int n);

    std::string str() const;           // "1 1 1 1 8"
    std::string compact_str() const;   // "11118" (single-digit entries only)

    auto operator<=>(const DifferenceCycle&) const = default;

private:
    std::vector<int> entries_;
    int n_ = 0;
};

/// Lexicographically least rotation of a word.
std::vector<int> least_rotation(std::vector<int> word);

} // namespace cyctri
