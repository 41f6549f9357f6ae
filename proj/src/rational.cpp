#include "fewnomial/rational.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial {

Int int_pow(const Int& base, unsigned long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

Rat rat_pow(const Rat& base, long k) {
    if (k == 0) return Rat(1);
    if (k < 0 && base == 0) raise(ErrorKind::DivisionByZero, "0 raised to a negative power");
    unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
    Int num = int_pow(base.get_num(), a);
    Int den = int_pow(base.get_den(), a);
    return k > 0 ? make_rat(num, den) : make_rat(den, num);
}

std::optional<Int> int_nth_root(const Int& n, unsigned long d) {
    if (d == 0) return std::nullopt;
    if (d == 1) return n;
    if (n < 0 && d % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), d);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rat> rat_nth_root(const Rat& q, unsigned long d) {
    auto num = int_nth_root(Int(q.get_num()), d);
    if (!num) return std::nullopt;
    auto den = int_nth_root(Int(q.get_den()), d);
    if (!den) return std::nullopt;
    return make_rat(*num, *den);
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat binomial_fractional(const Rat& a, unsigned long k) {
    Rat r(1);
    Rat f = a;
    for (unsigned long i = 0; i < k; ++i) {
        r *= f;
        r /= Rat(static_cast<unsigned long>(i + 1));
        f -= 1;
    }
    return r;
}

} // namespace fewnomial
