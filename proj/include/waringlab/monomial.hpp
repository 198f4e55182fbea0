#pragma once

#include <map>
#include <vector>

#include "waringlab/rational.hpp"

namespace waringlab {

/// Exponent tuple (a_0, ..., a_n) of a monomial x^a.
using Exponents = std::vector<int>;

/// Orders exponent tuples of equal degree by lexicographic descent with
/// x0 > x1 > ... > xn, the fixed monomial order used for every matrix
/// layout and serialization.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// dim S^d in n+1 variables = C(n+d, d).
Eigen::Index monomial_count(int n, int d);

/// All degree-d exponent tuples in n+1 variables, in the fixed order.
const std::vector<Exponents>& monomial_basis(int n, int d);

/// Position of a tuple within monomial_basis(n, d).
Eigen::Index monomial_index(int n, int d, const Exponents& a);

/// d! / (a_0! ... a_n!) for a summing to d.
Rat multinomial(int d, const Exponents& a);

}  // namespace waringlab
