#include "fewnomial/resolvent.hpp"

#include <algorithm>
#include <map>

#include "fewnomial/error.hpp"
#include "fewnomial/rational.hpp"

namespace fewnomial {

namespace {

// Sparse multivariate polynomial in the formal roots a_1..a_e.
using Mono = std::vector<int>;
using MVPoly = std::map<Mono, Rat>;

MVPoly mv_mul(const MVPoly& a, const MVPoly& b, int e) {
    MVPoly r;
    Mono m(static_cast<std::size_t>(e), 0);
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            for (int i = 0; i < e; ++i)
                m[static_cast<std::size_t>(i)] =
                    ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
            auto [it, fresh] = r.try_emplace(m, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

void mv_sub_scaled(MVPoly& a, const MVPoly& b, const Rat& c) {
    for (const auto& [m, cb] : b) {
        auto [it, fresh] = a.try_emplace(m, -c * cb);
        if (!fresh) {
            it->second -= c * cb;
            if (it->second == 0) a.erase(it);
        }
    }
}

// Elementary symmetric polynomial e_i of a_1..a_e as an MVPoly.
MVPoly elementary(int e, int i) {
    MVPoly r;
    std::vector<int> idx(static_cast<std::size_t>(i));
    for (int t = 0; t < i; ++t) idx[static_cast<std::size_t>(t)] = t;
    if (i == 0) {
        r[Mono(static_cast<std::size_t>(e), 0)] = Rat(1);
        return r;
    }
    while (true) {
        Mono m(static_cast<std::size_t>(e), 0);
        for (int t : idx) m[static_cast<std::size_t>(t)] = 1;
        r[m] = Rat(1);
        int pos = i - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == e - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < i; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return r;
}

// Lex-leading monomial of a symmetric polynomial; its exponents are weakly
// decreasing, so it encodes a product of elementary symmetric polynomials.
Mono lex_leading(const MVPoly& f) {
    Mono best;
    bool first = true;
    for (const auto& [m, c] : f) {
        if (first || std::lexicographical_compare(best.begin(), best.end(),
                                                  m.begin(), m.end())) {
            best = m;
            first = false;
        }
    }
    return best;
}

// Gauss reduction: write the symmetric polynomial f as a polynomial in the
// elementary symmetric polynomials. Returns (coefficient, multiplicities)
// pairs, where multiplicities[i] is the power of e_{i+1}.
std::vector<std::pair<Rat, std::vector<int>>> symmetric_reduce(
    MVPoly f, const std::vector<MVPoly>& elem, int e) {
    std::vector<std::pair<Rat, std::vector<int>>> out;
    while (!f.empty()) {
        Mono lead = lex_leading(f);
        Rat c = f.at(lead);
        std::vector<int> word(static_cast<std::size_t>(e), 0);
        for (int i = 0; i < e; ++i) {
            int next = i + 1 < e ? lead[static_cast<std::size_t>(i) + 1] : 0;
            int diff = lead[static_cast<std::size_t>(i)] - next;
            if (diff < 0)
                raise(ErrorKind::VerificationFailed,
                      "leading monomial of a symmetric polynomial not a partition");
            word[static_cast<std::size_t>(i)] = diff;
        }
        MVPoly prod;
        prod[Mono(static_cast<std::size_t>(e), 0)] = Rat(1);
        for (int i = 0; i < e; ++i)
            for (int t = 0; t < word[static_cast<std::size_t>(i)]; ++t)
                prod = mv_mul(prod, elem[static_cast<std::size_t>(i)], e);
        mv_sub_scaled(f, prod, c);
        out.emplace_back(c, std::move(word));
    }
    return out;
}

} // namespace

std::vector<DensePoly> resolvent(const std::vector<DensePoly>& phi, int j, int k) {
    if (phi.empty() || phi.back() != DensePoly(Rat(1)))
        raise(ErrorKind::NotMonic, "resolvent input must be monic in y");
    const int e = static_cast<int>(phi.size()) - 1;
    if (e < 1 || e > kResolventDegreeCap)
        raise(ErrorKind::CapExceeded,
              "resolvent degree must satisfy 1 <= e <= " +
                  std::to_string(kResolventDegreeCap));
    if (j < 1 || k < j || k > e)
        raise(ErrorKind::CapExceeded, "resolvent indices must satisfy 1 <= j <= k <= e");

    // Precompute e_1..e_e of the formal roots.
    std::vector<MVPoly> elem;
    for (int i = 1; i <= e; ++i) elem.push_back(elementary(e, i));

    // P(y) = prod over k-subsets T of (y - sum_j(T)), coefficients in the
    // formal roots.
    std::vector<MVPoly> ycoeffs(1);
    ycoeffs[0][Mono(static_cast<std::size_t>(e), 0)] = Rat(1);

    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) subset[static_cast<std::size_t>(t)] = t;
    while (true) {
        // sum_j over the chosen roots: elementary symmetric of degree j in
        // the variables indexed by the subset.
        MVPoly s;
        std::vector<int> pick(static_cast<std::size_t>(j));
        for (int t = 0; t < j; ++t) pick[static_cast<std::size_t>(t)] = t;
        while (true) {
            Mono m(static_cast<std::size_t>(e), 0);
            for (int t : pick) m[static_cast<std::size_t>(subset[static_cast<std::size_t>(t)])] = 1;
            s[m] = Rat(1);
            int pos = j - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == k - j + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int t = pos + 1; t < j; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }

        // multiply accumulated product by (y - s)
        std::vector<MVPoly> next(ycoeffs.size() + 1);
        for (std::size_t m = 0; m < ycoeffs.size(); ++m) {
            next[m + 1] = ycoeffs[m];
            MVPoly drop = mv_mul(ycoeffs[m], s, e);
            for (auto& [mono, c] : drop) {
                auto [it, fresh] = next[m].try_emplace(mono, -c);
                if (!fresh) {
                    it->second -= c;
                    if (it->second == 0) next[m].erase(it);
                }
            }
        }
        ycoeffs = std::move(next);

        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == e - k + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < k; ++t)
            subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
    }

    // e_i(roots) = (-1)^i * phi[e-i]; reduce each y-coefficient and evaluate.
    std::vector<DensePoly> values;
    for (int i = 1; i <= e; ++i) {
        DensePoly v = phi[static_cast<std::size_t>(e - i)];
        if (i % 2 == 1) v = -v;
        values.push_back(std::move(v));
    }

    std::vector<DensePoly> out;
    out.reserve(ycoeffs.size());
    for (auto& coeff : ycoeffs) {
        DensePoly acc;
        for (auto& [c, word] : symmetric_reduce(std::move(coeff), elem, e)) {
            DensePoly term(c);
            for (int i = 0; i < e; ++i)
                for (int t = 0; t < word[static_cast<std::size_t>(i)]; ++t)
                    term = term * values[static_cast<std::size_t>(i)];
            acc = acc + term;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace fewnomial
