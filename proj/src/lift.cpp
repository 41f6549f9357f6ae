#include "fewnomial/lift.hpp"

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

void observe(LiftStats* stats, const SparsePoly& p) {
    if (stats && p.term_count() > stats->max_terms) stats->max_terms = p.term_count();
}

void check_budget(const SparsePoly& p, std::uint64_t budget) {
    if (p.term_count() > budget)
        raise(ErrorKind::TermBudgetExceeded,
              "lifting intermediate exceeded the term budget of " +
                  std::to_string(budget));
}

} // namespace

std::optional<SparsePoly> lift_simple_root(const std::vector<SparsePoly>& c,
                                           const Rat& y0, const Int& max_deg,
                                           std::uint64_t term_budget,
                                           LiftStats* stats) {
    const std::size_t dy = c.size() - 1;
    const Int cutoff = max_deg + 1;

    // phi_y(0, y0): constant because the seed's constant term never changes.
    Rat dp0(0);
    Rat ypow(1);
    for (std::size_t j = 1; j <= dy; ++j) {
        dp0 += Rat(static_cast<unsigned long>(j)) * c[j].eval_special(0) * ypow;
        ypow *= y0;
    }
    if (dp0 == 0)
        raise(ErrorKind::VerificationFailed, "lifting requires a simple seed");

    std::vector<SparsePoly> ct;  // truncated coefficients
    ct.reserve(c.size());
    for (const auto& cj : c) ct.push_back(truncate(cj, cutoff));

    // Maintain powers of the candidate: P[j] = R^j mod x^{max_deg+1}.
    std::vector<SparsePoly> P(dy + 1);
    P[0] = SparsePoly(Rat(1));
    SparsePoly R(y0);
    for (std::size_t j = 1; j <= dy; ++j) P[j] = SparsePoly(rat_pow(y0, static_cast<long>(j)));

    SparsePoly defect;
    for (std::size_t j = 0; j <= dy; ++j) defect = defect + ct[j] * P[j];
    defect = truncate(defect, cutoff);
    observe(stats, defect);

    while (!defect.is_zero()) {
        if (stats) ++stats->rounds;
        const Int m = defect.ord();
        if (m > max_deg) return std::nullopt;
        const Rat t = -defect.terms().front().coeff / dp0;
        const SparsePoly tm = SparsePoly::monomial(t, m);

        // Update the powers and the defect incrementally: the new term only
        // contributes binomial cross terms against the previous powers.
        std::vector<SparsePoly> delta(dy + 1);
        for (std::size_t j = 1; j <= dy; ++j) {
            SparsePoly d;
            SparsePoly tpow = tm;
            for (std::size_t i = 1; i <= j; ++i) {
                d = d + scale(shift_exp(P[j - i], tpow.ord()),
                              tpow.terms().front().coeff * Rat(binomial(j, i)));
                if (i < j) tpow = tpow * tm;
            }
            delta[j] = truncate(d, cutoff);
        }
        R = R + tm;
        check_budget(R, term_budget);
        observe(stats, R);
        for (std::size_t j = 1; j <= dy; ++j) {
            P[j] = P[j] + delta[j];
            check_budget(P[j], term_budget);
            observe(stats, P[j]);
            defect = defect + truncate(ct[j] * delta[j], cutoff);
        }
        defect = truncate(defect, cutoff);
        check_budget(defect, term_budget);
        observe(stats, defect);
    }
    return R;
}

} // namespace fewnomial
