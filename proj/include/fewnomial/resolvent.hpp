#ifndef FEWNOMIAL_RESOLVENT_HPP
#define FEWNOMIAL_RESOLVENT_HPP

#include <vector>

#include "fewnomial/dense_poly.hpp"

namespace fewnomial {

inline constexpr int kResolventDegreeCap = 6;

// Subset resolvent of a polynomial monic in y with coefficients in Q[x].
// Input: phi as its y-coefficients (lowest power first, length e+1, monic).
// Output: the y-coefficients of
//   psi_{jk}(x,y) = prod over k-subsets T of the roots of
//                   (y - (j-th elementary symmetric polynomial of T)),
// a monic polynomial of y-degree C(e,k) whose coefficients are computed by
// expanding over formal roots and reducing symmetric functions to the
// elementary symmetric polynomials of phi.
std::vector<DensePoly> resolvent(const std::vector<DensePoly>& phi, int j, int k);

} // namespace fewnomial

#endif
