#ifndef FEWNOMIAL_KRONECKER_HPP
#define FEWNOMIAL_KRONECKER_HPP

#include <map>
#include <optional>
#include <vector>

#include "fewnomial/factor.hpp"
#include "fewnomial/intmatrix.hpp"
#include "fewnomial/multi_poly.hpp"

namespace fewnomial {

// All verdicts are over Q(x). `over_c` records what is provable about C(x):
// witnessed reducibility always transfers; for degree-2 fibers a Q(x)-
// irreducible binomial or quadratic is C(x)-reducible exactly when the
// relevant discriminant is a constant times a square, which is detected.
enum class Verdict { Irreducible, Reducible, Unsupported };
enum class AbsoluteStatus { Same, ReducibleOverC, Unknown };

struct FiberReport {
    Verdict verdict = Verdict::Unsupported;
    AbsoluteStatus over_c = AbsoluteStatus::Unknown;
    // y-polynomials over Q[x] (coefficient vectors in y, lowest first) whose
    // product is the fiber; present exactly when verdict == Reducible.
    std::vector<std::vector<DensePoly>> witness;
};

// specialize(f, (1, d, d^2, ..., d^{l-1})).
std::vector<SparsePoly> kronecker_substitute(const MultiPoly& f, const Int& d);

// Capelli's criterion for y^m - u over Q(x): irreducible iff u is not a p-th
// power for any prime p | m and, when 4 | m, u is not of the form -4 w^4.
bool capelli_irreducible(unsigned long m, const DensePoly& u);

// The witnessed-reducibility side of the criterion: an explicit verified
// factorization of y^m - u when one exists.
std::optional<std::vector<std::vector<DensePoly>>> capelli_witness(unsigned long m,
                                                                   const DensePoly& u);

// Classify f(K_d(x), y) for each d in [d_lo, d_hi]. Supported fiber shapes:
// y-binomials (Capelli) and y-quadratics (discriminant).
std::map<long, FiberReport> irreducibility_sweep(
    const MultiPoly& f, long d_lo, long d_hi,
    std::uint64_t dense_cap = kDefaultFactorDegreeCap);

struct BertiniScan {
    // The pullback-irreducibility hypothesis, checked on f(t_1^e,...,t_l^e,y)
    // with e = deg_y f; nullopt when that polynomial has no supported shape.
    std::optional<bool> pullback_irreducible;
    std::vector<std::vector<long>> reducible;
    std::vector<IntMatrix> lattices;  // proper sublattices covering the above
    std::vector<std::vector<long>> uncovered;
};

// Sweep all exponent vectors in [1, n_box]^l, record the reducible fibers
// and cluster them into proper sublattices of Z^l. An empirical picture of
// the exceptional set, not a certificate.
BertiniScan bertini_scan(const MultiPoly& f, long n_box,
                         const std::optional<std::vector<Rat>>& theta = std::nullopt,
                         std::uint64_t sweep_cap = 100000,
                         std::uint64_t dense_cap = kDefaultFactorDegreeCap);

} // namespace fewnomial

#endif
