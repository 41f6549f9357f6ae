#ifndef FEWNOMIAL_MODP_HPP
#define FEWNOMIAL_MODP_HPP

#include <cstdint>
#include <vector>

#include "fewnomial/rational.hpp"

namespace fewnomial::modp {

// Polynomials over F_p for word-size odd primes p < 2^59, coefficients
// lowest degree first, trailing coefficient nonzero.
using Poly = std::vector<std::uint64_t>;

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

Poly trim(Poly f);
long degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);  // monic
// g = gcd(a, b) monic with s*a + t*b = g.
void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly make_monic(const Poly& f, std::uint64_t p);
// a^e mod (f), e arbitrary precision.
Poly pow_mod(const Poly& a, const Int& e, const Poly& f, std::uint64_t p);

// Reduce an integer polynomial (lowest first) mod p.
Poly reduce(const std::vector<Int>& f, std::uint64_t p);

} // namespace fewnomial::modp

#endif
