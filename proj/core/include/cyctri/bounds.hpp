#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyctri {

using Rational = boost::multiprecision::cpp_rational;

/// Generalized binomial C(a, k) for rational a via the falling factorial,
/// exact. Needed with half-integer a.
Rational binomial(const Rational& a, unsigned k);

/// Both sides of the lower- and upper-bound inequalities specialized to the
/// equality instances checked here:
///   LBT:  (-1)^k C(2k+1, k+1) (chi - 2)   vs   4^{k+1} C((d-1)/2, k+1)
///   UBT:  10 (chi - 2)                    vs   (4/3)(m-1)(m-3)(m-5)
struct BoundSides {
    Rational lbt_lhs, lbt_rhs;
    Rational ubt_lhs, ubt_rhs;
};

BoundSides check_bound_equality(long long chi, unsigned k, long long d, long long m);

} // namespace cyctri
