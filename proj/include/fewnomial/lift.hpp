#ifndef FEWNOMIAL_LIFT_HPP
#define FEWNOMIAL_LIFT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

struct LiftStats {
    std::size_t max_terms = 0;  // largest intermediate term count observed
    std::size_t rounds = 0;
};

// Newton-Hensel lifting of a simple seed y0 of phi(x,y) = sum_j c[j](x) y^j
// to a polynomial root of degree <= max_deg. The derivative inverse is the
// constant 1/phi_y(0, y0), so each round recovers exactly one term of the
// root; intermediates are truncated at x^{max_deg+1}, which keeps the work
// proportional to the root's term count on sparse instances regardless of
// exponent size.
//
// Returns the candidate root (its defect vanishes mod x^{max_deg+1}; callers
// must still verify exactly), or nullopt when the series root is provably not
// a polynomial of degree <= max_deg. Raises TermBudgetExceeded when an
// intermediate exceeds the budget, in which case the answer is unknown.
//
// Pre: phi_y(0, y0) != 0 and phi(0, y0) = 0.
std::optional<SparsePoly> lift_simple_root(const std::vector<SparsePoly>& c,
                                           const Rat& y0, const Int& max_deg,
                                           std::uint64_t term_budget,
                                           LiftStats* stats = nullptr);

} // namespace fewnomial

#endif
