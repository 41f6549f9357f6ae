#include "fewnomial/rational_function.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial {

RationalFunction::RationalFunction(DensePoly num, DensePoly den) {
    if (den.is_zero()) raise(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = DensePoly(Rat(1));
        return;
    }
    DensePoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = div_exact(num, g);
        den = div_exact(den, g);
    }
    Rat lead = den.leading();
    num_ = scale(num, Rat(1) / lead);
    den_ = scale(den, Rat(1) / lead);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    return RationalFunction(-r.num(), r.den());
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero function");
    return RationalFunction(a.num() * b.den(), a.den() * b.num());
}

} // namespace fewnomial
