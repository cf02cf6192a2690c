#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cyctri {

/// Face-count vector (f_0,...,f_d).
struct FVector {
    std::vector<long long> counts;

    FVector() = default;
    FVector(std::initializer_list<long long> c) : counts(c) {}
    explicit FVector(std::vector<long long> c) : counts(std::move(c)) {}

    int dim() const { return static_cast<int>(counts.size()) - 1; }
    long long euler() const;
    std::string str() const; // "(12,60,160,180,72)"

    auto operator<=>(const FVector&) const = default;
};

struct DehnSommervilleCheck {
    bool ds1 = false; // 2f1 - 3f2 + 4f3 - 5f4 == 0
    bool ds2 = false; // 2f3 == 5f4
    long long chi = 0;
};

/// Both Dehn-Sommerville relations for triangulated 4-manifolds.
/// Requires a 5-entry f-vector.
DehnSommervilleCheck check_dehn_sommerville(const FVector& f);

} // namespace cyctri
