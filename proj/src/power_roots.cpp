#include "fewnomial/power_roots.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"
#include "fewnomial/factor.hpp"
#include "fewnomial/lift.hpp"

namespace fewnomial {

namespace {

struct Normalized {
    Int offset;      // ord(F); g gets x^{offset/d}
    Rat unit_root;   // d-th root of the lowest coefficient
    SparsePoly u;    // F / (c x^a), so u = 1 + h with ord(h) > 0
    Int root_span;   // (deg F - ord F) / d
};

// Factor F = c x^a (1 + h) and check the divisibility and d-th power
// conditions on a and c. nullopt when F cannot be a d-th power.
std::optional<Normalized> normalize_for_root(const SparsePoly& F, unsigned long d) {
    const Int& a = F.ord();
    const Int span = F.deg() - a;
    if (!mpz_divisible_ui_p(a.get_mpz_t(), d)) return std::nullopt;
    if (!mpz_divisible_ui_p(span.get_mpz_t(), d)) return std::nullopt;
    const Rat& c = F.terms().front().coeff;
    auto croot = rat_nth_root(c, d);
    if (!croot) return std::nullopt;
    Normalized n;
    n.offset = a;
    n.unit_root = *croot;
    n.u = scale(shift_exp(F, -a), Rat(1) / c);
    n.root_span = span / static_cast<long>(d);
    return n;
}

} // namespace

std::optional<SparsePoly> nth_root(const SparsePoly& F, unsigned long d,
                                   std::uint64_t term_budget) {
    if (F.is_zero()) raise(ErrorKind::ZeroPolynomial, "d-th root of zero");
    if (d == 0) raise(ErrorKind::CapExceeded, "root index must be at least 1");
    if (d == 1) return F;

    auto n = normalize_for_root(F, d);
    if (!n) return std::nullopt;

    // Lift the simple seed 1 of y^d - u.
    std::vector<SparsePoly> c(d + 1);
    c[0] = -n->u;
    c[d] = SparsePoly(Rat(1));
    auto r = lift_simple_root(c, Rat(1), n->root_span, term_budget);
    if (!r) return std::nullopt;

    SparsePoly g = scale(shift_exp(*r, n->offset / static_cast<long>(d)), n->unit_root);
    if (pow(g, d, term_budget) != F) return std::nullopt;
    return g;
}

std::optional<SparsePoly> nth_root_binomial(const SparsePoly& F, unsigned long d,
                                            std::uint64_t term_budget) {
    if (F.is_zero()) raise(ErrorKind::ZeroPolynomial, "d-th root of zero");
    if (d == 0) raise(ErrorKind::CapExceeded, "root index must be at least 1");
    if (d == 1) return F;

    auto n = normalize_for_root(F, d);
    if (!n) return std::nullopt;

    const Int cutoff = n->root_span + 1;
    const SparsePoly h = truncate(n->u, cutoff) - SparsePoly(Rat(1));
    const Rat exponent = make_rat(1, static_cast<long>(d));

    SparsePoly r(Rat(1));
    SparsePoly hpow(Rat(1));
    unsigned long k = 0;
    while (true) {
        hpow = truncate(mul(hpow, h, term_budget), cutoff);
        if (hpow.is_zero()) break;
        ++k;
        r = r + scale(hpow, binomial_fractional(exponent, k));
        if (r.term_count() > term_budget)
            raise(ErrorKind::TermBudgetExceeded, "binomial series exceeded the budget");
    }

    SparsePoly g = scale(shift_exp(r, n->offset / static_cast<long>(d)), n->unit_root);
    if (pow(g, d, term_budget) != F) return std::nullopt;
    return g;
}

PreimageResult schinzel_preimage(const DensePoly& p, const SparsePoly& F,
                                 std::uint64_t term_budget) {
    if (p.degree() < 1) raise(ErrorKind::ConstantInput, "composition with a constant");
    if (F.is_zero()) raise(ErrorKind::ZeroPolynomial, "preimage of zero");
    if (F.ord() < 0)
        raise(ErrorKind::NegativeExponent, "preimage search needs ord(F) >= 0");

    // Seeds: rational roots of p(y) - F(0).
    std::vector<Rat> p0 = p.coeffs();
    p0[0] -= F.coeff_at(Int(0));
    DensePoly seed_poly = DensePoly::from_coeffs(std::move(p0));

    PreimageResult out;
    if (seed_poly.is_zero()) {
        // p(y) = F(0) identically is impossible for deg(p) >= 1.
        raise(ErrorKind::VerificationFailed, "degenerate seed polynomial");
    }

    auto seeds = rational_roots(seed_poly);
    long mult_sum = 0;
    for (const auto& [root, mult] : seeds) mult_sum += mult;
    if (mult_sum < seed_poly.degree()) out.complete = false;  // irrational seeds

    const Int max_deg = F.deg() / p.degree();

    std::vector<SparsePoly> c(p.coeffs().size());
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) c[j] = SparsePoly(p.coeff(j));
    c[0] = c[0] - F;

    for (const auto& [y0, mult] : seeds) {
        if (mult > 1) {
            out.complete = false;
            continue;
        }
        auto g = lift_simple_root(c, y0, max_deg, term_budget);
        if (!g) continue;
        // exact verification: p(g) = F
        SparsePoly acc;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = mul(acc, *g, term_budget) + SparsePoly(*it);
        if (acc == F) out.preimages.push_back(std::move(*g));
    }
    std::sort(out.preimages.begin(), out.preimages.end(),
              [](const SparsePoly& a, const SparsePoly& b) { return compare(a, b) < 0; });
    return out;
}

} // namespace fewnomial
