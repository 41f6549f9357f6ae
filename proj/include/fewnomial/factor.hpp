#ifndef FEWNOMIAL_FACTOR_HPP
#define FEWNOMIAL_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "fewnomial/dense_poly.hpp"
#include "fewnomial/modp.hpp"

namespace fewnomial {

inline constexpr std::uint64_t kDefaultFactorDegreeCap = 512;

struct FactorPower {
    DensePoly factor;  // monic irreducible over Q
    int multiplicity;
};

// unit * prod factor^multiplicity equals the input exactly.
struct Factorization {
    Rat unit;
    std::vector<FactorPower> factors;
};

struct ModFactor {
    modp::Poly factor;  // monic irreducible over F_prime
    int multiplicity;
};

struct ModFactorization {
    std::uint64_t prime;
    std::uint64_t unit;
    std::vector<ModFactor> factors;
};

// Complete factorization over the prime field via Cantor-Zassenhaus.
// Requires prime not dividing the leading coefficient (or any coefficient
// denominator) and the reduction squarefree mod prime.
ModFactorization factor_mod_p(const DensePoly& p, std::uint64_t prime);

// Complete factorization over Q: squarefree decomposition, modular
// factorization, Hensel lifting and exhaustive subset recombination.
Factorization factor_q(const DensePoly& p,
                       std::uint64_t degree_cap = kDefaultFactorDegreeCap);

// All rational roots with multiplicities, sorted ascending.
std::vector<std::pair<Rat, int>> rational_roots(const DensePoly& p);

} // namespace fewnomial

#endif
