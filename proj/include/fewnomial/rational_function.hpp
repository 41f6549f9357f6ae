#ifndef FEWNOMIAL_RATIONAL_FUNCTION_HPP
#define FEWNOMIAL_RATIONAL_FUNCTION_HPP

#include "fewnomial/dense_poly.hpp"

namespace fewnomial {

// Reduced rational function over Q(x): gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() = default;  // zero
    explicit RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
    explicit RationalFunction(DensePoly p) : num_(std::move(p)), den_(Rat(1)) {}
    RationalFunction(DensePoly num, DensePoly den);  // reduces

    const DensePoly& num() const { return num_; }
    const DensePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // [Q(x) : Q(f)] for nonconstant f: max of the degrees.
    long map_degree() const { return std::max(num_.degree(), den_.degree()); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    DensePoly num_;
    DensePoly den_{Rat(1)};
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

} // namespace fewnomial

#endif
