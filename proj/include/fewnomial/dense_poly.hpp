#ifndef FEWNOMIAL_DENSE_POLY_HPP
#define FEWNOMIAL_DENSE_POLY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

// Dense univariate polynomial over Q, coefficients lowest degree first,
// trailing coefficient nonzero (zero polynomial = empty vector). This is the
// independent oracle world: plain quadratic algorithms, exact arithmetic.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(const Rat& constant);
    explicit DensePoly(long constant) : DensePoly(Rat(constant)) {}

    static DensePoly from_coeffs(std::vector<Rat> coeffs);
    static DensePoly monomial(const Rat& coeff, std::size_t exp);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rat eval(const Rat& x) const;

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    std::vector<Rat> c_;
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly scale(const DensePoly& a, const Rat& c);
DensePoly pow(const DensePoly& a, unsigned long k);

std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b);
// Exact quotient; raises DivisionByZero on zero divisor, VerificationFailed
// if the division leaves a remainder.
DensePoly div_exact(const DensePoly& a, const DensePoly& b);

DensePoly derivative(const DensePoly& a);
DensePoly monic(const DensePoly& a);
// p(x + a).
DensePoly compose_shift(const DensePoly& p, const Rat& a);

// gcd of the coefficients, carrying the sign of the leading coefficient.
Rat content(const DensePoly& a);
// Monic gcd over Q (modular algorithm behind the scenes).
DensePoly gcd(const DensePoly& a, const DensePoly& b);

struct SquarefreePart {
    DensePoly factor;  // monic squarefree
    int multiplicity;
};

struct SquarefreeDecomposition {
    Rat unit;  // leading coefficient of the input
    std::vector<SquarefreePart> parts;
};

// Yun's algorithm: input = unit * prod parts[i].factor ^ multiplicity, the
// factors squarefree and pairwise coprime.
SquarefreeDecomposition squarefree_decompose(const DensePoly& p);

// Returns g with g^d = p over Q if one exists. For even d the returned g has
// positive leading coefficient.
std::optional<DensePoly> is_dth_power(const DensePoly& p, unsigned long d);

// Bridges to the sparse world.
DensePoly to_dense(const SparsePoly& p, std::uint64_t degree_cap);
SparsePoly from_dense(const DensePoly& q);

int compare(const DensePoly& a, const DensePoly& b);

} // namespace fewnomial

#endif
