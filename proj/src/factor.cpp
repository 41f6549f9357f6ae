#include "fewnomial/factor.hpp"

#include <algorithm>
#include <random>

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

using ZPoly = std::vector<Int>;  // lowest degree first

ZPoly zp_trim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

long zp_degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (Int& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    return zp_trim(std::move(r));
}

ZPoly zp_from_modp(const modp::Poly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (std::uint64_t c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

modp::Poly zp_to_modp(const ZPoly& f, std::uint64_t p) { return modp::reduce(f, p); }

// Balanced representative in (-m/2, m/2].
ZPoly zp_balance(ZPoly f, const Int& m) {
    for (Int& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c * 2 > m) c -= m;
    }
    return zp_trim(std::move(f));
}

DensePoly zp_to_dense(const ZPoly& f) {
    std::vector<Rat> c;
    c.reserve(f.size());
    for (const Int& x : f) c.emplace_back(x);
    return DensePoly::from_coeffs(std::move(c));
}

bool modp_poly_less(const modp::Poly& a, const modp::Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ---- Cantor-Zassenhaus over F_p --------------------------------------

modp::Poly random_poly(std::mt19937_64& rng, std::size_t max_deg, std::uint64_t p) {
    modp::Poly f(max_deg + 1);
    for (auto& c : f) c = rng() % p;
    return modp::trim(std::move(f));
}

void equal_degree_split(const modp::Poly& f, long k, std::uint64_t p,
                        std::mt19937_64& rng, std::vector<modp::Poly>& out) {
    if (modp::degree(f) == k) {
        out.push_back(modp::make_monic(f, p));
        return;
    }
    modp::Poly splitter;
    while (true) {
        modp::Poly a = random_poly(rng, static_cast<std::size_t>(modp::degree(f)) - 1, p);
        if (modp::degree(a) < 1) continue;
        modp::Poly g = modp::gcd(a, f, p);
        if (modp::degree(g) > 0 && modp::degree(g) < modp::degree(f)) {
            splitter = g;
            break;
        }
        if (p == 2) {
            // Trace map a + a^2 + ... + a^{2^{k-1}} mod f.
            modp::Poly tr = modp::rem(a, f, p);
            modp::Poly cur = tr;
            for (long i = 1; i < k; ++i) {
                cur = modp::rem(modp::mul(cur, cur, p), f, p);
                tr = modp::add(tr, cur, p);
            }
            modp::Poly g2 = modp::gcd(tr, f, p);
            if (modp::degree(g2) > 0 && modp::degree(g2) < modp::degree(f)) {
                splitter = g2;
                break;
            }
        } else {
            Int e = (int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)) - 1) / 2;
            modp::Poly b = modp::pow_mod(a, e, f, p);
            modp::Poly bm1 = modp::sub(b, modp::Poly{1}, p);
            modp::Poly g2 = modp::gcd(bm1, f, p);
            if (modp::degree(g2) > 0 && modp::degree(g2) < modp::degree(f)) {
                splitter = g2;
                break;
            }
        }
    }
    equal_degree_split(splitter, k, p, rng, out);
    modp::Poly q, r;
    modp::divrem(f, splitter, q, r, p);
    equal_degree_split(modp::make_monic(q, p), k, p, rng, out);
}

// Factor a monic squarefree polynomial over F_p into monic irreducibles.
std::vector<modp::Poly> cz_factor(const modp::Poly& f, std::uint64_t p) {
    std::vector<modp::Poly> out;
    std::uint64_t seed = p ^ 0x9e3779b97f4a7c15ull;
    for (std::uint64_t c : f) seed = seed * 1099511628211ull + c;
    std::mt19937_64 rng(seed);

    modp::Poly rest = f;
    modp::Poly x{0, 1};
    modp::Poly h = modp::rem(x, rest, p);
    long k = 0;
    while (modp::degree(rest) > 2 * (k + 1) - 1) {
        ++k;
        h = modp::pow_mod(h, Int(static_cast<unsigned long>(p)), rest, p);
        modp::Poly g = modp::gcd(modp::sub(h, x, p), rest, p);
        if (modp::degree(g) > 0) {
            equal_degree_split(g, k, p, rng, out);
            modp::Poly q, r;
            modp::divrem(rest, g, q, r, p);
            rest = modp::make_monic(q, p);
            h = modp::rem(h, rest, p);
        }
    }
    if (modp::degree(rest) > 0) out.push_back(modp::make_monic(rest, p));
    std::sort(out.begin(), out.end(), modp_poly_less);
    return out;
}

// ---- Hensel lifting ---------------------------------------------------

// Lift F = g*h (mod p) to mod p^a. F is exact (unreduced); g, h monic with
// coefficients kept canonical in [0, p^k).
void hensel_pair(const ZPoly& F, ZPoly& g, ZPoly& h, std::uint64_t p, const Int& target) {
    modp::Poly G = zp_to_modp(g, p), H = zp_to_modp(h, p);
    modp::Poly gg, s, t;
    modp::xgcd(G, H, gg, s, t, p);
    if (modp::degree(gg) != 0)
        raise(ErrorKind::BadPrime, "factors not coprime mod p during lifting");

    Int mk(static_cast<unsigned long>(p));
    Int pz(static_cast<unsigned long>(p));
    while (mk < target) {
        // w = (F - g*h)/p^k mod p
        ZPoly e(F);
        ZPoly gh = zp_mul_mod(g, h, mk * pz);
        e.resize(std::max(e.size(), gh.size()), Int(0));
        for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        ZPoly w_int;
        w_int.reserve(e.size());
        for (Int& c : e) w_int.push_back(c / mk);
        modp::Poly w = zp_to_modp(w_int, p);

        modp::Poly u = modp::rem(modp::mul(t, w, p), G, p);
        modp::Poly num = modp::sub(w, modp::mul(u, H, p), p);
        modp::Poly v, r;
        modp::divrem(num, G, v, r, p);
        if (!r.empty())
            raise(ErrorKind::BadPrime, "inconsistent Hensel correction");

        if (g.size() < u.size() + 1) g.resize(u.size(), Int(0));
        for (std::size_t i = 0; i < u.size(); ++i)
            g[i] += mk * Int(static_cast<unsigned long>(u[i]));
        if (h.size() < v.size() + 1) h.resize(v.size(), Int(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            h[i] += mk * Int(static_cast<unsigned long>(v[i]));
        mk *= pz;
    }
}

void hensel_tree(const ZPoly& F, const std::vector<modp::Poly>& factors,
                 std::size_t lo, std::size_t hi, std::uint64_t p, const Int& target,
                 std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        ZPoly f = F;
        for (Int& c : f) {
            c %= target;
            if (c < 0) c += target;
        }
        out.push_back(zp_trim(std::move(f)));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    modp::Poly G{1}, H{1};
    for (std::size_t i = lo; i < mid; ++i) G = modp::mul(G, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) H = modp::mul(H, factors[i], p);
    ZPoly g = zp_from_modp(G), h = zp_from_modp(H);
    hensel_pair(F, g, h, p, target);
    hensel_tree(g, factors, lo, mid, p, target, out);
    hensel_tree(h, factors, mid, hi, p, target, out);
}

// ---- Zassenhaus over Z ------------------------------------------------

// Mignotte-style bound: any monic factor of monic F has coefficients of
// absolute value at most 2^n * ||F||_2.
Int factor_bound(const ZPoly& F) {
    Int sum(0);
    for (const Int& c : F) sum += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), sum.get_mpz_t());
    root += 1;
    Int b = root << static_cast<unsigned long>(F.size());
    return b;
}

bool dense_divides(const DensePoly& divisor, const DensePoly& a) {
    auto [q, r] = divrem(a, divisor);
    (void)q;
    return r.is_zero();
}

// Factor a monic squarefree integer polynomial into monic irreducibles
// over Q (all of which are integral).
std::vector<ZPoly> zassenhaus_monic(const ZPoly& F) {
    const long n = zp_degree(F);
    if (n <= 1) return {F};

    // Prime selection: a few medium primes with squarefree reduction, keep
    // the one giving the fewest modular factors.
    Int cursor(1);
    cursor <<= 28;
    std::uint64_t best_p = 0;
    std::vector<modp::Poly> best_factors;
    for (int tried = 0; tried < 3;) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        std::uint64_t p = cursor.get_ui();
        modp::Poly Fp = zp_to_modp(F, p);
        if (modp::degree(Fp) != n) continue;
        modp::Poly d = modp::derivative(Fp, p);
        if (modp::degree(modp::gcd(Fp, d, p)) != 0) continue;
        auto factors = cz_factor(modp::make_monic(Fp, p), p);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        ++tried;
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) return {F};

    const std::uint64_t p = best_p;
    Int bound = factor_bound(F) * 2 + 1;
    Int target(static_cast<unsigned long>(p));
    while (target < bound) target *= static_cast<unsigned long>(p);

    std::vector<ZPoly> lifted;
    hensel_tree(F, best_factors, 0, best_factors.size(), p, target, lifted);

    std::vector<ZPoly> result;
    DensePoly rest = zp_to_dense(F);
    std::vector<ZPoly> avail = std::move(lifted);

    std::size_t card = 1;
    while (card * 2 <= avail.size()) {
        bool found = false;
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{Int(1)};
            for (std::size_t i : idx) cand = zp_mul_mod(cand, avail[i], target);
            cand = zp_balance(std::move(cand), target);
            DensePoly cd = zp_to_dense(cand);
            if (dense_divides(cd, rest)) {
                result.push_back(cand);
                rest = div_exact(rest, cd);
                std::vector<ZPoly> keep;
                for (std::size_t i = 0, j = 0; i < avail.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(std::move(avail[i]));
                }
                avail = std::move(keep);
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   avail.size() - card + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < card; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++card;
    }
    if (rest.degree() > 0) {
        ZPoly tail;
        for (const Rat& c : rest.coeffs()) tail.push_back(Int(c.get_num()));
        result.push_back(std::move(tail));
    }
    return result;
}

// Monic rational squarefree -> monic irreducible rational factors, via the
// substitution y = lambda*x that clears denominators while staying monic.
std::vector<DensePoly> factor_monic_squarefree(const DensePoly& s) {
    const long n = s.degree();
    if (n == 1) return {s};

    Int lambda(1);
    for (const Rat& c : s.coeffs())
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), c.get_den().get_mpz_t());

    // F(y) = lambda^n * s(y/lambda), monic with integer coefficients.
    ZPoly F(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Rat c = s.coeff(static_cast<std::size_t>(i)) *
                Rat(int_pow(lambda, static_cast<unsigned long>(n - i)));
        F[static_cast<std::size_t>(i)] = Int(c.get_num());
    }

    std::vector<DensePoly> out;
    for (const ZPoly& G : zassenhaus_monic(zp_trim(std::move(F)))) {
        // g(x) = G(lambda*x) / lambda^deg(G)
        std::vector<Rat> c(G.size());
        for (std::size_t i = 0; i < G.size(); ++i)
            c[i] = Rat(G[i]) * rat_pow(Rat(lambda), static_cast<long>(i)) /
                   Rat(int_pow(lambda, static_cast<unsigned long>(G.size() - 1)));
        out.push_back(DensePoly::from_coeffs(std::move(c)));
    }
    return out;
}

} // namespace

ModFactorization factor_mod_p(const DensePoly& f, std::uint64_t prime) {
    if (f.is_zero()) raise(ErrorKind::ZeroPolynomial, "factoring the zero polynomial");
    if (prime < 2 || prime >= (1ull << 59))
        raise(ErrorKind::BadPrime, "prime must be a small odd-word prime or 2");

    // Reduce rational coefficients; denominators must be invertible mod p.
    modp::Poly F(f.coeffs().size());
    Int pz(static_cast<unsigned long>(prime));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Rat& q = f.coeffs()[i];
        if (q.get_den() % pz == 0)
            raise(ErrorKind::BadPrime, "coefficient denominator divisible by prime");
        std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), prime);
        std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), prime);
        F[i] = modp::mul(num, modp::inv(den, prime), prime);
    }
    if (modp::degree(modp::trim(F)) != f.degree())
        raise(ErrorKind::BadPrime, "prime divides the leading coefficient");
    F = modp::trim(std::move(F));

    std::uint64_t unit = F.back();
    modp::Poly M = modp::make_monic(F, prime);
    modp::Poly d = modp::derivative(M, prime);
    if (modp::degree(modp::gcd(M, d, prime)) != 0)
        raise(ErrorKind::BadPrime, "polynomial not squarefree modulo prime");

    ModFactorization out;
    out.prime = prime;
    out.unit = unit;
    if (modp::degree(M) > 0)
        for (auto& g : cz_factor(M, prime)) out.factors.push_back({std::move(g), 1});
    return out;
}

Factorization factor_q(const DensePoly& p, std::uint64_t degree_cap) {
    if (p.is_zero()) raise(ErrorKind::ZeroPolynomial, "factoring the zero polynomial");
    if (p.degree() > static_cast<long>(degree_cap))
        raise(ErrorKind::DegreeCapExceeded,
              "degree " + std::to_string(p.degree()) + " exceeds factorization cap " +
                  std::to_string(degree_cap));

    Factorization out;
    out.unit = p.leading();
    if (p.degree() == 0) return out;

    for (const auto& part : squarefree_decompose(p).parts) {
        for (auto& g : factor_monic_squarefree(part.factor))
            out.factors.push_back({std::move(g), part.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower& a, const FactorPower& b) {
                  return compare(a.factor, b.factor) < 0;
              });

    DensePoly check(out.unit);
    for (const auto& fp : out.factors)
        check = check * pow(fp.factor, static_cast<unsigned long>(fp.multiplicity));
    if (check != p)
        raise(ErrorKind::VerificationFailed, "factorization product identity failed");
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const DensePoly& p) {
    if (p.is_zero()) raise(ErrorKind::ZeroPolynomial, "rational roots of zero");
    std::vector<std::pair<Rat, int>> roots;
    if (p.degree() == 0) return roots;
    for (const auto& fp : factor_q(p).factors)
        if (fp.factor.degree() == 1)
            roots.emplace_back(-fp.factor.coeff(0), fp.multiplicity);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

} // namespace fewnomial
