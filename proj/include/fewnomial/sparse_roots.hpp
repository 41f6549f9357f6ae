#ifndef FEWNOMIAL_SPARSE_ROOTS_HPP
#define FEWNOMIAL_SPARSE_ROOTS_HPP

#include <optional>
#include <vector>

#include "fewnomial/lift.hpp"
#include "fewnomial/multi_poly.hpp"

namespace fewnomial {

enum class SolvePath { SparseLift, DenseFallback };

struct SolveOptions {
    std::uint64_t term_budget = kDefaultTermBudget;
    std::uint64_t dense_cap = 4096;
    LiftStats* stats = nullptr;  // optional instrumentation
};

struct SolveResult {
    std::vector<SparsePoly> roots;  // each verified exactly; sorted
    bool complete = false;
    SolvePath path = SolvePath::SparseLift;
};

// True iff f(theta-free substitution x^{n_i}, g(x)) = 0 exactly.
bool verify(const MultiPoly& f, const std::vector<Int>& n, const SparsePoly& g);

// All roots g in Q[x] of the monic equation f(x^{n_1},...,x^{n_l}, y) = 0,
// by sparse Newton lifting from the simple rational seeds of f(0,...,0,y),
// with a dense shift-and-lift fallback when the seed polynomial has multiple
// roots. `complete` is reported honestly: it is true only when the seed
// polynomial is squarefree over the algebraic closure or the dense fallback
// ran.
SolveResult solve_monic(const MultiPoly& f, const std::vector<Int>& n,
                        const SolveOptions& opts = {});

// Deliberately non-reduced ratio of sparse polynomials.
struct FewnomialRatio {
    SparsePoly num;
    SparsePoly den;
};

// Given p/q in Q(x^n), returns the residue-class pieces (p_i, q_i) with
// p = sum_i x^i p_i(x^n), q likewise, for the least residue i with q_i != 0.
// The cross-identity p_i(x^n) q = p q_i(x^n) certifies membership in Q(x^n).
FewnomialRatio descend(const SparsePoly& p, const SparsePoly& q, unsigned long n);

// Shortest nonzero integer vector k with k . n = 0 and max |k_i| <= C,
// minimal in (max-norm, then lexicographic after sign normalization) order.
std::optional<std::vector<long>> exponent_relation(const std::vector<Int>& n, long C);

} // namespace fewnomial

#endif
