#ifndef FEWNOMIAL_SPARSE_POLY_HPP
#define FEWNOMIAL_SPARSE_POLY_HPP

#include <cstdint>
#include <vector>

#include "fewnomial/rational.hpp"

namespace fewnomial {

inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};
inline constexpr std::uint64_t kDefaultTermBudget = 100000;

struct Term {
    Int exp;
    Rat coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Canonical sparse Laurent polynomial: strictly increasing exponents, no
// zero coefficients, zero = empty term list. Exponents are arbitrary
// precision; a two-term polynomial may span degree 10^18 without any
// dense storage.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(const Rat& constant);
    explicit SparsePoly(long constant) : SparsePoly(Rat(constant)) {}

    static SparsePoly monomial(const Rat& coeff, const Int& exp);
    // Merges equal exponents, drops zeros, sorts ascending. Idempotent.
    static SparsePoly from_terms(std::vector<Term> raw);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Int& ord() const;  // lowest exponent; error on zero
    const Int& deg() const;  // highest exponent; error on zero

    bool is_canonical() const;
    Rat coeff_at(const Int& exp) const;

    // Evaluation is deliberately restricted to 0, 1, -1; general points are
    // astronomically large for fewnomial exponents.
    Rat eval_special(int point) const;

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::vector<Term> terms_;
};

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, std::uint64_t term_budget);
SparsePoly pow(const SparsePoly& p, unsigned long k,
               std::uint64_t term_budget = kUnlimitedBudget);

SparsePoly scale(const SparsePoly& p, const Rat& c);
// Multiply by x^shift.
SparsePoly shift_exp(const SparsePoly& p, const Int& shift);

// Drops all terms of exponent >= cutoff.
SparsePoly truncate(const SparsePoly& p, const Int& cutoff);

// Inverse of a unit power series: returns v with truncate(u*v, cutoff) = 1.
SparsePoly series_inv(const SparsePoly& u, const Int& cutoff, std::uint64_t term_budget);

// Total order compatible with equality, used to merge result sets
// deterministically.
int compare(const SparsePoly& a, const SparsePoly& b);

} // namespace fewnomial

#endif
