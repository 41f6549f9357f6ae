#include "fewnomial/sparse_roots.hpp"

#include <algorithm>
#include <map>

#include "fewnomial/error.hpp"
#include "fewnomial/factor.hpp"
#include "fewnomial/rational_function.hpp"

namespace fewnomial {

namespace {

SparsePoly substitute_power(const SparsePoly& g, unsigned long n) {
    std::vector<Term> out;
    out.reserve(g.term_count());
    for (const auto& t : g.terms()) out.push_back(Term{t.exp * static_cast<long>(n), t.coeff});
    return SparsePoly::from_terms(std::move(out));
}

// ---- dense fallback helpers -------------------------------------------

using YPoly = std::vector<RationalFunction>;  // y-coefficients over Q(x)

YPoly ytrim(YPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

YPoly yderivative(const YPoly& f) {
    YPoly r;
    for (std::size_t j = 1; j < f.size(); ++j)
        r.push_back(f[j] * RationalFunction(Rat(static_cast<unsigned long>(j))));
    return ytrim(std::move(r));
}

YPoly yrem(YPoly a, const YPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        RationalFunction c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = a[shift + i] - c * b[i];
        }
        a = ytrim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

YPoly ygcd(YPoly a, YPoly b) {
    a = ytrim(std::move(a));
    b = ytrim(std::move(b));
    while (!b.empty()) {
        YPoly r = yrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        RationalFunction lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

YPoly ydiv_exact(const YPoly& a, const YPoly& b) {
    YPoly q(a.size() - b.size() + 1);
    YPoly r = a;
    while (r.size() >= b.size() && !r.empty()) {
        RationalFunction c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = r[shift + i] - c * b[i];
        r = ytrim(std::move(r));
    }
    if (!r.empty())
        raise(ErrorKind::VerificationFailed, "inexact division in Q(x)[y]");
    return q;
}

// The y-squarefree part of phi, cleared to polynomial coefficients.
std::vector<DensePoly> y_squarefree_part(const std::vector<DensePoly>& phi) {
    YPoly f;
    for (const auto& c : phi) f.push_back(RationalFunction(c));
    f = ytrim(std::move(f));
    YPoly g = ygcd(f, yderivative(f));
    YPoly star = g.size() <= 1 ? f : ydiv_exact(f, g);

    // common denominator, then divide out the polynomial content
    DensePoly lcm(Rat(1));
    for (const auto& c : star) {
        if (c.is_zero()) continue;
        lcm = div_exact(lcm * c.den(), gcd(lcm, c.den()));
    }
    std::vector<DensePoly> out;
    out.reserve(star.size());
    for (const auto& c : star) out.push_back(c.num() * div_exact(lcm, c.den()));
    DensePoly cont;
    for (const auto& c : out) cont = gcd(cont, c);
    if (cont.degree() > 0)
        for (auto& c : out) c = div_exact(c, cont);
    return out;
}

} // namespace

bool verify(const MultiPoly& f, const std::vector<Int>& n, const SparsePoly& g) {
    auto c = specialize(f, n);
    SparsePoly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + *it;
    return acc.is_zero();
}

SolveResult solve_monic(const MultiPoly& f, const std::vector<Int>& n,
                        const SolveOptions& opts) {
    if (!f.is_monic_in_y())
        raise(ErrorKind::NotMonic, "solve_monic requires f monic in y");
    for (const Int& ni : n)
        if (ni < 0) raise(ErrorKind::NegativeExponent, "exponents must be nonnegative");

    auto c = specialize(f, n);
    for (const auto& cj : c)
        if (!cj.is_zero() && cj.ord() < 0)
            raise(ErrorKind::NegativeExponent, "specialization has a pole at 0");

    Int D(0);
    for (const Int& ni : n) D += ni;
    D *= f.degree_bound();

    // Seed polynomial f(0,...,0,y).
    std::vector<Rat> p0c;
    p0c.reserve(c.size());
    for (const auto& cj : c) p0c.push_back(cj.eval_special(0));
    DensePoly p0 = DensePoly::from_coeffs(std::move(p0c));
    DensePoly p0d = derivative(p0);

    const bool closure_squarefree = gcd(p0, p0d).degree() == 0;
    auto seeds = rational_roots(p0);
    bool multiple_rational_seed = false;
    for (const auto& [y0, mult] : seeds)
        if (mult > 1) multiple_rational_seed = true;

    SolveResult result;
    bool budget_hit = false;
    for (const auto& [y0, mult] : seeds) {
        if (mult > 1) continue;
        std::optional<SparsePoly> g;
        try {
            g = lift_simple_root(c, y0, D, opts.term_budget, opts.stats);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TermBudgetExceeded) throw;
            budget_hit = true;
            continue;
        }
        if (g && verify(f, n, *g)) result.roots.push_back(std::move(*g));
    }

    if (closure_squarefree && !budget_hit) {
        result.complete = true;
        result.path = SolvePath::SparseLift;
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const SparsePoly& a, const SparsePoly& b) { return compare(a, b) < 0; });
        return result;
    }

    if (D > Int(static_cast<unsigned long>(opts.dense_cap))) {
        if (multiple_rational_seed)
            raise(ErrorKind::DenseCapExceeded,
                  "dense fallback needed for a multiple rational seed but the degree bound " +
                      to_string(D) + " exceeds the cap " + std::to_string(opts.dense_cap));
        // honest partial answer: the sparse path covered every rational seed
        result.complete = false;
        result.path = SolvePath::SparseLift;
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const SparsePoly& a, const SparsePoly& b) { return compare(a, b) < 0; });
        return result;
    }

    // ---- dense fallback: shift to a squarefree fiber and lift there ----
    const std::uint64_t dense_budget =
        std::max<std::uint64_t>(opts.term_budget, opts.dense_cap + 2);
    std::vector<DensePoly> phi;
    phi.reserve(c.size());
    for (const auto& cj : c) phi.push_back(to_dense(cj, opts.dense_cap));
    std::vector<DensePoly> star = y_squarefree_part(phi);

    // smallest nonnegative integer shift with a squarefree full-degree fiber
    Rat x0(0);
    for (long trial = 0;; ++trial) {
        x0 = Rat(trial);
        if (star.back().eval(x0) == 0) continue;
        std::vector<Rat> fiber;
        fiber.reserve(star.size());
        for (const auto& sj : star) fiber.push_back(sj.eval(x0));
        DensePoly fy = DensePoly::from_coeffs(std::move(fiber));
        if (gcd(fy, derivative(fy)).degree() == 0) break;
    }

    std::vector<SparsePoly> shifted;
    shifted.reserve(star.size());
    std::vector<Rat> seed0;
    for (const auto& sj : star) {
        DensePoly s = compose_shift(sj, x0);
        seed0.push_back(s.coeff(0));
        shifted.push_back(from_dense(s));
    }
    DensePoly fiber0 = DensePoly::from_coeffs(std::move(seed0));

    result.roots.clear();
    for (const auto& [y0, mult] : rational_roots(fiber0)) {
        if (mult != 1)
            raise(ErrorKind::VerificationFailed, "shifted fiber was not squarefree");
        auto g = lift_simple_root(shifted, y0, D, dense_budget, opts.stats);
        if (!g) continue;
        SparsePoly back = from_dense(compose_shift(to_dense(*g, opts.dense_cap), -x0));
        if (verify(f, n, back)) result.roots.push_back(std::move(back));
    }
    result.complete = true;
    result.path = SolvePath::DenseFallback;
    std::sort(result.roots.begin(), result.roots.end(),
              [](const SparsePoly& a, const SparsePoly& b) { return compare(a, b) < 0; });
    return result;
}

FewnomialRatio descend(const SparsePoly& p, const SparsePoly& q, unsigned long n) {
    if (q.is_zero()) raise(ErrorKind::ZeroDenominator, "descend with zero denominator");
    if (n == 0) raise(ErrorKind::ZeroDenominator, "descend modulus must be at least 1");

    auto residue_piece = [n](const SparsePoly& f, unsigned long r) {
        std::vector<Term> out;
        for (const auto& t : f.terms()) {
            if (mpz_fdiv_ui(t.exp.get_mpz_t(), n) != r) continue;
            Int e;
            Int re(static_cast<unsigned long>(r));
            mpz_fdiv_q(e.get_mpz_t(), Int(t.exp - re).get_mpz_t(),
                       Int(static_cast<unsigned long>(n)).get_mpz_t());
            out.push_back(Term{e, t.coeff});
        }
        return SparsePoly::from_terms(std::move(out));
    };

    unsigned long least = 0;
    SparsePoly qi;
    for (unsigned long r = 0; r < n; ++r) {
        qi = residue_piece(q, r);
        if (!qi.is_zero()) {
            least = r;
            break;
        }
    }
    SparsePoly pi = residue_piece(p, least);

    if (substitute_power(pi, n) * q != p * substitute_power(qi, n))
        raise(ErrorKind::NotAPowerSubstitution,
              "p/q is not a rational function of x^" + std::to_string(n));
    return FewnomialRatio{pi, qi};
}

std::optional<std::vector<long>> exponent_relation(const std::vector<Int>& n, long C) {
    const std::size_t l = n.size();
    if (l == 0) raise(ErrorKind::LengthMismatch, "empty exponent vector");
    if (C <= 0) return std::nullopt;

    Int box = int_pow(Int(2 * C + 1), static_cast<unsigned long>(l));
    if (box > 100000000)
        raise(ErrorKind::SearchCapExceeded,
              "(2C+1)^l = " + to_string(box) + " exceeds the search cap 10^8");

    if (l == 1) {
        if (n[0] == 0) return std::vector<long>{1};
        return std::nullopt;
    }

    std::vector<long> best;
    auto consider = [&](std::vector<long> k) {
        for (long v : k)
            if (v != 0) {
                if (v < 0)
                    for (long& x : k) x = -x;
                break;
            }
        long norm = 0;
        for (long v : k) norm = std::max(norm, v < 0 ? -v : v);
        if (norm == 0) return;
        if (!best.empty()) {
            long bnorm = 0;
            for (long v : best) bnorm = std::max(bnorm, v < 0 ? -v : v);
            if (norm > bnorm) return;
            if (norm == bnorm && !std::lexicographical_compare(k.begin(), k.end(),
                                                               best.begin(), best.end()))
                return;
        }
        best = std::move(k);
    };

    bool has_zero = false;
    for (const Int& ni : n)
        if (ni == 0) has_zero = true;

    std::vector<long> k(l, 0);
    if (has_zero) {
        // full box scan
        auto rec = [&](auto&& self, std::size_t pos, const Int& sum) -> void {
            if (pos == l) {
                if (sum == 0) consider(k);
                return;
            }
            for (long v = -C; v <= C; ++v) {
                k[pos] = v;
                self(self, pos + 1, sum + n[pos] * v);
            }
            k[pos] = 0;
        };
        rec(rec, 0, Int(0));
    } else {
        // scan the prefix, solve the last coordinate by division
        auto rec = [&](auto&& self, std::size_t pos, const Int& sum) -> void {
            if (pos == l - 1) {
                Int num = -sum;
                if (!mpz_divisible_p(num.get_mpz_t(), n[pos].get_mpz_t())) return;
                Int kl = num / n[pos];
                if (kl > C || kl < -C) return;
                k[pos] = kl.get_si();
                consider(k);
                k[pos] = 0;
                return;
            }
            for (long v = -C; v <= C; ++v) {
                k[pos] = v;
                self(self, pos + 1, sum + n[pos] * v);
            }
            k[pos] = 0;
        };
        rec(rec, 0, Int(0));
    }

    if (best.empty()) return std::nullopt;
    return best;
}

} // namespace fewnomial
