#include "cyctri/fvector.hpp"

#include <sstream>
#include <stdexcept>

namespace cyctri {

long long FVector::euler() const {
    long long chi = 0;
    long long sign = 1;
    for (long long c : counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

std::string FVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ',';
        os << counts[i];
    }
    os << ')';
    return os.str();
}

DehnSommervilleCheck check_dehn_sommerville(const FVector& f) {
    if (f.counts.size() != 5)
        throw std::invalid_argument("Dehn-Sommerville check expects a 5-entry f-vector");
    const auto& c = f.counts;
    DehnSommervilleCheck r;
    r.ds1 = (2 * c[1] - 3 * c[2] + 4 * c[3] - 5 * c[4]) == 0;
    r.ds2 = (2 * c[3] - 5 * c[4]) == 0;
    r.chi = f.euler();
    return r;
}

} // namespace cyctri
