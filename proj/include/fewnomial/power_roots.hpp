#ifndef FEWNOMIAL_POWER_ROOTS_HPP
#define FEWNOMIAL_POWER_ROOTS_HPP

#include <optional>
#include <vector>

#include "fewnomial/dense_poly.hpp"
#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

// Decides whether F = g^d for some g in Q[x, x^-1] and recovers g, verified
// by exact sparse multiplication. For even d both signs are roots; the one
// with positive lowest-order coefficient is returned. TermBudgetExceeded
// means "unknown at this budget", which is distinct from a definitive absent.
std::optional<SparsePoly> nth_root(const SparsePoly& F, unsigned long d,
                                   std::uint64_t term_budget = kDefaultTermBudget);

// Cross-check route for tests: direct binomial series sum_k C(1/d, k) h^k.
// Same contract and sign convention as nth_root.
std::optional<SparsePoly> nth_root_binomial(const SparsePoly& F, unsigned long d,
                                            std::uint64_t term_budget = kDefaultTermBudget);

struct PreimageResult {
    std::vector<SparsePoly> preimages;
    // False when p(y) - F(0) has a multiple or non-rational root: in those
    // cases solutions with p'(g(0)) = 0 or irrational g(0) may exist beyond
    // the reported ones.
    bool complete = true;
};

// All g in Q[x] with p(g(x)) = F(x) and p'(g(0)) != 0, found by Newton
// lifting from the simple rational roots of p(y) - F(0).
PreimageResult schinzel_preimage(const DensePoly& p, const SparsePoly& F,
                                 std::uint64_t term_budget = kDefaultTermBudget);

} // namespace fewnomial

#endif
