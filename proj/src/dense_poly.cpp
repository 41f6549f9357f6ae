#include "fewnomial/dense_poly.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"
#include "fewnomial/modp.hpp"

namespace fewnomial {

namespace {

std::vector<Rat> trim(std::vector<Rat> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Scale to a primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer(const DensePoly& a) {
    Int lcm_den(1);
    for (const Rat& q : a.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> c;
    c.reserve(a.coeffs().size());
    Int g(0);
    for (const Rat& q : a.coeffs()) {
        Rat scaled = q * Rat(lcm_den);
        c.push_back(Int(scaled.get_num()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
    }
    if (g != 0) {
        if (c.back() < 0) g = -g;
        for (Int& x : c) x /= g;
    }
    return c;
}

DensePoly from_int_coeffs(const std::vector<Int>& c) {
    std::vector<Rat> q;
    q.reserve(c.size());
    for (const Int& x : c) q.emplace_back(x);
    return DensePoly::from_coeffs(std::move(q));
}

bool divides_exactly(const DensePoly& divisor, const DensePoly& a) {
    if (divisor.is_zero()) return a.is_zero();
    auto [q, r] = divrem(a, divisor);
    (void)q;
    return r.is_zero();
}

} // namespace

DensePoly::DensePoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

DensePoly DensePoly::from_coeffs(std::vector<Rat> coeffs) {
    DensePoly p;
    p.c_ = trim(std::move(coeffs));
    return p;
}

DensePoly DensePoly::monomial(const Rat& coeff, std::size_t exp) {
    if (coeff == 0) return {};
    std::vector<Rat> c(exp + 1, Rat(0));
    c[exp] = coeff;
    return from_coeffs(std::move(c));
}

const Rat& DensePoly::leading() const {
    if (c_.empty()) raise(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
    return c_.back();
}

Rat DensePoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return DensePoly::from_coeffs(std::move(c));
}

DensePoly operator-(const DensePoly& a) {
    std::vector<Rat> c;
    c.reserve(a.coeffs().size());
    for (const Rat& q : a.coeffs()) c.push_back(-q);
    return DensePoly::from_coeffs(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return DensePoly::from_coeffs(std::move(c));
}

DensePoly scale(const DensePoly& a, const Rat& c) {
    if (c == 0) return {};
    std::vector<Rat> out;
    out.reserve(a.coeffs().size());
    for (const Rat& q : a.coeffs()) out.push_back(q * c);
    return DensePoly::from_coeffs(std::move(out));
}

DensePoly pow(const DensePoly& a, unsigned long k) {
    DensePoly result(Rat(1));
    DensePoly base = a;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    long db = b.degree();
    std::vector<Rat> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db) + 1 : 0,
                       Rat(0));
    const Rat& lead = b.leading();
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        std::size_t shift = r.size() - b.coeffs().size();
        Rat c = r.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            r[shift + i] -= c * b.coeffs()[i];
        r = trim(std::move(r));
    }
    return {DensePoly::from_coeffs(std::move(q)), DensePoly::from_coeffs(std::move(r))};
}

DensePoly div_exact(const DensePoly& a, const DensePoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        raise(ErrorKind::VerificationFailed, "expected exact polynomial division");
    return q;
}

DensePoly derivative(const DensePoly& a) {
    if (a.coeffs().size() <= 1) return {};
    std::vector<Rat> c(a.coeffs().size() - 1, Rat(0));
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        c[i - 1] = a.coeffs()[i] * Rat(static_cast<unsigned long>(i));
    return DensePoly::from_coeffs(std::move(c));
}

DensePoly monic(const DensePoly& a) {
    if (a.is_zero()) return a;
    return scale(a, Rat(1) / a.leading());
}

DensePoly compose_shift(const DensePoly& p, const Rat& a) {
    DensePoly result;
    DensePoly xa = DensePoly::from_coeffs({a, Rat(1)});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        result = result * xa + DensePoly(*it);
    return result;
}

Rat content(const DensePoly& a) {
    if (a.is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& q : a.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rat c = make_rat(num_gcd, den_lcm);
    if (a.leading() < 0) c = -c;
    return c;
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() == 0 || b.degree() == 0) return DensePoly(Rat(1));

    std::vector<Int> A = primitive_integer(a);
    std::vector<Int> B = primitive_integer(b);
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

    Int prime_cursor(1);
    prime_cursor <<= 30;
    long best_deg = -1;
    Int modulus(1);
    std::vector<Int> crt;  // balanced representatives of gamma * monic modular gcd

    for (int rounds = 0; rounds < 512; ++rounds) {
        mpz_nextprime(prime_cursor.get_mpz_t(), prime_cursor.get_mpz_t());
        std::uint64_t p = prime_cursor.get_ui();
        if (A.back() % prime_cursor == 0 || B.back() % prime_cursor == 0) continue;

        modp::Poly gp = modp::gcd(modp::reduce(A, p), modp::reduce(B, p), p);
        long dg = modp::degree(gp);
        if (dg == 0) return DensePoly(Rat(1));
        if (best_deg >= 0 && dg > best_deg) continue;  // unlucky prime
        if (best_deg < 0 || dg < best_deg) {
            best_deg = dg;
            modulus = 1;
            crt.assign(static_cast<std::size_t>(dg) + 1, Int(0));
        }

        Int pz(static_cast<unsigned long>(p));
        std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        modp::Poly hp = modp::scale(gp, gm, p);
        hp.resize(static_cast<std::size_t>(dg) + 1, 0);

        if (modulus == 1) {
            for (std::size_t i = 0; i < crt.size(); ++i) {
                Int v(static_cast<unsigned long>(hp[i]));
                if (v * 2 > pz) v -= pz;
                crt[i] = v;
            }
            modulus = pz;
        } else {
            Int minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            Int new_mod = modulus * pz;
            for (std::size_t i = 0; i < crt.size(); ++i) {
                Int r1 = crt[i];
                Int diff = Int(static_cast<unsigned long>(hp[i])) - r1;
                Int t = (diff * minv) % pz;
                if (t < 0) t += pz;
                Int v = r1 + modulus * t;
                if (v * 2 > new_mod) v -= new_mod;
                crt[i] = v;
            }
            modulus = new_mod;
        }

        // Primitive part of the candidate, then exact divisibility check.
        Int cont(0);
        for (const Int& x : crt) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        if (cont == 0) continue;
        std::vector<Int> cand;
        cand.reserve(crt.size());
        for (const Int& x : crt) cand.push_back(x / cont);
        DensePoly candidate = from_int_coeffs(cand);
        if (candidate.degree() != best_deg) continue;
        if (divides_exactly(candidate, from_int_coeffs(A)) &&
            divides_exactly(candidate, from_int_coeffs(B)))
            return monic(candidate);
    }
    raise(ErrorKind::VerificationFailed, "modular gcd did not stabilize");
}

SquarefreeDecomposition squarefree_decompose(const DensePoly& p) {
    if (p.is_zero())
        raise(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    out.unit = p.leading();
    DensePoly u = monic(p);
    if (u.degree() == 0) return out;

    DensePoly up = derivative(u);
    DensePoly a = gcd(u, up);
    if (a.degree() == 0) {
        out.parts.push_back({u, 1});
        return out;
    }
    DensePoly b = div_exact(u, a);
    DensePoly c = div_exact(up, a);
    DensePoly d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        DensePoly s = gcd(b, d);
        if (s.degree() > 0) out.parts.push_back({s, i});
        b = div_exact(b, s);
        c = div_exact(d, s);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

std::optional<DensePoly> is_dth_power(const DensePoly& p, unsigned long d) {
    if (p.is_zero()) raise(ErrorKind::ZeroPolynomial, "d-th power test on zero");
    if (d == 1) return p;
    if (p.degree() % static_cast<long>(d) != 0) return std::nullopt;

    auto dec = squarefree_decompose(p);
    auto root_unit = rat_nth_root(dec.unit, d);
    if (!root_unit) return std::nullopt;
    DensePoly g(*root_unit);
    for (const auto& part : dec.parts) {
        if (part.multiplicity % static_cast<int>(d) != 0) return std::nullopt;
        g = g * pow(part.factor,
                    static_cast<unsigned long>(part.multiplicity) / d);
    }
    if (pow(g, d) != p)
        raise(ErrorKind::VerificationFailed, "d-th root candidate failed verification");
    return g;
}

DensePoly to_dense(const SparsePoly& p, std::uint64_t degree_cap) {
    if (p.is_zero()) return {};
    if (p.ord() < 0)
        raise(ErrorKind::NegativeExponent, "dense conversion of a Laurent polynomial");
    if (p.deg() > Int(static_cast<unsigned long>(degree_cap)))
        raise(ErrorKind::DegreeCapExceeded,
              "degree " + to_string(p.deg()) + " exceeds dense cap " +
                  std::to_string(degree_cap));
    std::vector<Rat> c(p.deg().get_ui() + 1, Rat(0));
    for (const auto& t : p.terms()) c[t.exp.get_ui()] = t.coeff;
    return DensePoly::from_coeffs(std::move(c));
}

SparsePoly from_dense(const DensePoly& q) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < q.coeffs().size(); ++i)
        if (q.coeffs()[i] != 0)
            terms.push_back(Term{Int(static_cast<unsigned long>(i)), q.coeffs()[i]});
    return SparsePoly::from_terms(std::move(terms));
}

int compare(const DensePoly& a, const DensePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace fewnomial
