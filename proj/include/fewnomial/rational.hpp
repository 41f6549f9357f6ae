#ifndef FEWNOMIAL_RATIONAL_HPP
#define FEWNOMIAL_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace fewnomial {

// Exact arithmetic everywhere: exponents are arbitrary-precision signed
// integers, coefficients are canonical rationals (gcd(num,den)=1, den>=1).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

Int int_pow(const Int& base, unsigned long k);
Rat rat_pow(const Rat& base, long k);

// Exact d-th root of n, if one exists (for even d, n must be >= 0 and the
// nonnegative root is returned).
std::optional<Int> int_nth_root(const Int& n, unsigned long d);

// Exact d-th root of q in Q. For even d the positive root is returned.
std::optional<Rat> rat_nth_root(const Rat& q, unsigned long d);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// Falling-product binomial coefficient C(1/d, k) used by binomial series.
Rat binomial_fractional(const Rat& a, unsigned long k);

} // namespace fewnomial

#endif
