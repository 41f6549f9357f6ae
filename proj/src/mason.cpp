#include "fewnomial/mason.hpp"

#include <algorithm>
#include <random>

#include "fewnomial/error.hpp"
#include "fewnomial/factor.hpp"

namespace fewnomial {

namespace {

long multiplicity(const DensePoly& p, const DensePoly& factor) {
    long m = 0;
    DensePoly rest = p;
    while (true) {
        auto [q, r] = divrem(rest, factor);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++m;
    }
    return m;
}

// Exact rank over Q of the span of the given rational functions, computed on
// the numerators over a common denominator.
int rank_over_q(const std::vector<RationalFunction>& phi) {
    DensePoly lcm(Rat(1));
    for (const auto& f : phi) lcm = div_exact(lcm * f.den(), gcd(lcm, f.den()));
    std::size_t width = 0;
    std::vector<DensePoly> cleared;
    for (const auto& f : phi) {
        cleared.push_back(f.num() * div_exact(lcm, f.den()));
        width = std::max(width, cleared.back().coeffs().size());
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : cleared) {
        std::vector<Rat> row(width, Rat(0));
        for (std::size_t j = 0; j < p.coeffs().size(); ++j) row[j] = p.coeffs()[j];
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t col = 0;
    for (std::size_t r = 0; r < rows.size() && col < width; ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat c = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < width; ++j) rows[i][j] -= c * rows[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

} // namespace

bool place_less(const Place& a, const Place& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    if (a.is_infinity()) return false;
    return compare(*a.finite, *b.finite) < 0;
}

long valuation(const RationalFunction& f, const Place& v) {
    if (f.is_zero()) raise(ErrorKind::ZeroFunction, "valuation of the zero function");
    if (v.is_infinity()) return f.den().degree() - f.num().degree();
    return multiplicity(f.num(), *v.finite) - multiplicity(f.den(), *v.finite);
}

MasonReport check(const std::vector<RationalFunction>& phi, int r) {
    const int n = static_cast<int>(phi.size());
    if (n < 2) raise(ErrorKind::LengthMismatch, "need at least two functions");
    if (r < 0 || r > n) raise(ErrorKind::LengthMismatch, "r must lie in [0, n]");
    for (const auto& f : phi)
        if (f.is_zero()) raise(ErrorKind::ZeroFunction, "zero function in the input");
    for (int i = r; i < n; ++i)
        if (phi[static_cast<std::size_t>(i)].is_constant())
            raise(ErrorKind::ConstantTail,
                  "phi_" + std::to_string(i + 1) + " is constant but lies beyond r");

    if (rank_over_q(phi) < n)
        raise(ErrorKind::LinearlyDependent, "the functions are linearly dependent over Q");

    // Unreachable for exact rational data (a zero sum is itself a linear
    // dependence) but kept as a guard for the valuation below.
    RationalFunction sigma;
    for (const auto& f : phi) sigma = sigma + f;
    if (sigma.is_zero()) raise(ErrorKind::SigmaZero, "the functions sum to zero");

    // S: poles of every phi_i, zeros of phi_1..phi_r, infinity by degrees.
    std::vector<Place> S;
    auto add_place = [&S](Place p) {
        for (const auto& q : S)
            if (q == p) return;
        S.push_back(std::move(p));
    };
    for (int i = 0; i < n; ++i) {
        const auto& f = phi[static_cast<std::size_t>(i)];
        if (f.den().degree() > 0)
            for (const auto& fp : factor_q(f.den()).factors)
                add_place(Place{fp.factor});
        if (i < r && f.num().degree() > 0)
            for (const auto& fp : factor_q(f.num()).factors)
                add_place(Place{fp.factor});
        long vinf = valuation(f, Place{});
        if (vinf < 0 || (i < r && vinf > 0)) add_place(Place{});
    }
    std::sort(S.begin(), S.end(), place_less);

    MasonReport report;
    report.n = n;
    report.r = r;
    report.genus = 0;
    for (const auto& v : S) {
        long vs = valuation(sigma, v);
        long mn = valuation(phi[0], v);
        for (int i = 1; i < n; ++i)
            mn = std::min(mn, valuation(phi[static_cast<std::size_t>(i)], v));
        if (vs < mn)
            raise(ErrorKind::VerificationFailed,
                  "v(sigma) below the minimum, inconsistent valuations");
        report.per_place.push_back({v, vs, mn});
        report.lhs += vs - mn;
    }
    long tail = 0;
    for (int i = r; i < n; ++i) tail += phi[static_cast<std::size_t>(i)].map_degree();
    report.rhs = static_cast<long>(n) * (n - 1) / 2 *
                     (static_cast<long>(S.size()) + 2 * report.genus - 2) +
                 tail;
    report.holds = report.lhs <= report.rhs;
    return report;
}

std::pair<std::vector<RationalFunction>, int> random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x6d61736fULL);
    auto u = [&rng](std::uint64_t k) { return rng() % k; };
    auto coeff = [&](long bound) {
        return Rat(static_cast<long>(u(static_cast<std::uint64_t>(2 * bound + 1))) - bound);
    };

    while (true) {
        const int n = 2 + static_cast<int>(u(4));  // 2..5
        const int r = u(3) == 0 ? static_cast<int>(u(static_cast<std::uint64_t>(n) + 1))
                                : n;
        std::vector<RationalFunction> phi;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::vector<Rat> nc(u(5) + 1), dc(u(4) + 1);
            for (auto& c : nc) c = coeff(5);
            for (auto& c : dc) c = coeff(3);
            if (nc.back() == 0) nc.back() = Rat(1);
            if (dc.back() == 0) dc.back() = Rat(1);
            RationalFunction f(DensePoly::from_coeffs(std::move(nc)),
                               DensePoly::from_coeffs(std::move(dc)));
            if (f.is_zero() || (i >= r && f.is_constant())) {
                ok = false;
                break;
            }
            phi.push_back(std::move(f));
        }
        if (!ok) continue;
        if (rank_over_q(phi) < n) continue;
        RationalFunction sigma;
        for (const auto& f : phi) sigma = sigma + f;
        if (sigma.is_zero()) continue;
        return {std::move(phi), r};
    }
}

} // namespace fewnomial
