#include "cyctri/bounds.hpp"

#include <stdexcept>

namespace cyctri {

Rational binomial(const Rational& a, unsigned k) {
    Rational num = 1;
    for (unsigned i = 0; i < k; ++i) num *= (a - static_cast<int>(i));
    Rational den = 1;
    for (unsigned i = 2; i <= k; ++i) den *= static_cast<int>(i);
    return num / den;
}

BoundSides check_bound_equality(long long chi, unsigned k, long long d, long long m) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BoundSides b;
    const Rational excess = Rational(chi) - 2;

    Rational sign = (k % 2 == 0) ? 1 : -1;
    b.lbt_lhs = sign * binomial(Rational(2 * static_cast<long long>(k) + 1), k + 1) * excess;
    Rational pow4 = 1;
    for (unsigned i = 0; i <= k; ++i) pow4 *= 4;
    b.lbt_rhs = pow4 * binomial(Rational(d - 1) / 2, k + 1);

    b.ubt_lhs = 10 * excess;
    b.ubt_rhs = Rational(4, 3) * (m - 1) * (m - 3) * (m - 5);
    return b;
}

} // namespace cyctri
