#include "fewnomial/kronecker.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

// ---- small y-polynomial helpers (coefficients in Q[x]) ------------------

using YDense = std::vector<DensePoly>;

YDense ymul(const YDense& a, const YDense& b) {
    YDense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

YDense binomial_ypoly(unsigned long m, const DensePoly& u) {
    YDense f(m + 1);
    f[0] = -u;
    f[m] = DensePoly(Rat(1));
    return f;
}

void verify_witness(const YDense& target, const std::vector<YDense>& factors) {
    YDense prod{DensePoly(Rat(1))};
    for (const auto& f : factors) prod = ymul(prod, f);
    if (prod != target)
        raise(ErrorKind::VerificationFailed, "reducibility witness failed to multiply back");
}

std::vector<unsigned long> prime_divisors(unsigned long m) {
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) out.push_back(m);
    return out;
}

// Squarefree part is constant <=> u is a constant times a square in Q[x].
bool constant_times_square(const DensePoly& u) {
    for (const auto& part : squarefree_decompose(u).parts)
        if (part.multiplicity % 2 != 0) return false;
    return true;
}

// Classify one specialized fiber sum_j c[j](x) y^j (monic).
FiberReport classify_fiber(const std::vector<SparsePoly>& c, std::uint64_t dense_cap) {
    FiberReport report;
    const std::size_t m = c.size() - 1;
    if (m == 1) {
        report.verdict = Verdict::Irreducible;
        report.over_c = AbsoluteStatus::Same;
        return report;
    }

    bool middles_zero = true;
    for (std::size_t j = 1; j < m; ++j)
        if (!c[j].is_zero()) middles_zero = false;

    if (middles_zero) {
        if (c[0].is_zero()) {
            // y^m with m >= 2 splits as y * y^{m-1}
            report.verdict = Verdict::Reducible;
            report.over_c = AbsoluteStatus::Same;
            YDense lin{DensePoly(), DensePoly(Rat(1))};
            YDense rest(m, DensePoly());
            rest[m - 1] = DensePoly(Rat(1));
            report.witness = {lin, rest};
            verify_witness(binomial_ypoly(m, DensePoly()), report.witness);
            return report;
        }
        DensePoly u = -to_dense(c[0], dense_cap);
        if (u.degree() < 1) {
            report.verdict = Verdict::Unsupported;
            return report;
        }
        auto witness = capelli_witness(m, u);
        if (witness) {
            report.verdict = Verdict::Reducible;
            report.over_c = AbsoluteStatus::Same;
            report.witness = std::move(*witness);
        } else {
            report.verdict = Verdict::Irreducible;
            if (m == 2)
                report.over_c = constant_times_square(u) ? AbsoluteStatus::ReducibleOverC
                                                         : AbsoluteStatus::Same;
            else
                report.over_c = AbsoluteStatus::Unknown;
        }
        return report;
    }

    if (m == 2) {
        DensePoly b = to_dense(c[1], dense_cap);
        DensePoly c0 = to_dense(c[0], dense_cap);
        DensePoly disc = b * b - scale(c0, Rat(4));
        if (disc.is_zero()) {
            report.verdict = Verdict::Reducible;
            report.over_c = AbsoluteStatus::Same;
            YDense half{scale(b, make_rat(1, 2)), DensePoly(Rat(1))};
            report.witness = {half, half};
            verify_witness(YDense{c0, b, DensePoly(Rat(1))}, report.witness);
            return report;
        }
        auto s = is_dth_power(disc, 2);
        if (s) {
            report.verdict = Verdict::Reducible;
            report.over_c = AbsoluteStatus::Same;
            DensePoly r1 = scale(-b + *s, make_rat(1, 2));
            DensePoly r2 = scale(-b - *s, make_rat(1, 2));
            report.witness = {{-r1, DensePoly(Rat(1))}, {-r2, DensePoly(Rat(1))}};
            verify_witness(YDense{c0, b, DensePoly(Rat(1))}, report.witness);
        } else {
            report.verdict = Verdict::Irreducible;
            report.over_c = constant_times_square(disc) ? AbsoluteStatus::ReducibleOverC
                                                        : AbsoluteStatus::Same;
        }
        return report;
    }

    report.verdict = Verdict::Unsupported;
    return report;
}

// ---- multivariate perfect-power test ------------------------------------

MultiPoly multi_scale(const MultiPoly& u, const Rat& c) {
    std::vector<std::pair<MultiKey, Rat>> raw;
    for (const auto& [k, v] : u.terms()) raw.emplace_back(k, v * c);
    return MultiPoly::from_terms(u.var_count(), u.degree_bound(), std::move(raw));
}

MultiPoly multi_pow(const MultiPoly& u, unsigned long k) {
    MultiPoly r = MultiPoly::from_terms(u.var_count(), 0,
                                        {{MultiKey{std::vector<int>(static_cast<std::size_t>(u.var_count()), 0), 0},
                                          Rat(1)}});
    for (unsigned long i = 0; i < k; ++i) r = r * u;
    return r;
}

// Exact p-th root of a y-free Laurent MultiPoly, by lowest-term recovery.
// The Newton polytope of a root lies in (1/p) times that of u, so every
// candidate exponent is boxed and the recovery terminates.
std::optional<MultiPoly> multi_nth_root(const MultiPoly& u, unsigned long p) {
    if (u.is_zero() || p == 0) return std::nullopt;
    const int l = u.var_count();

    // componentwise exponent box of u
    std::vector<int> lo(static_cast<std::size_t>(l)), hi(static_cast<std::size_t>(l));
    bool first = true;
    for (const auto& [k, v] : u.terms()) {
        for (int i = 0; i < l; ++i) {
            int e = k.texp[static_cast<std::size_t>(i)];
            if (first || e < lo[static_cast<std::size_t>(i)]) lo[static_cast<std::size_t>(i)] = e;
            if (first || e > hi[static_cast<std::size_t>(i)]) hi[static_cast<std::size_t>(i)] = e;
        }
        first = false;
    }

    const auto& [a, c] = *u.terms().begin();  // lex-lowest term
    if (a.ypow != 0) return std::nullopt;
    for (int e : a.texp)
        if (e % static_cast<int>(p) != 0) return std::nullopt;
    auto croot = rat_nth_root(c, p);
    if (!croot) return std::nullopt;

    // normalized U = u / (c t^a): lowest term 1
    std::vector<std::pair<MultiKey, Rat>> raw;
    for (const auto& [k, v] : u.terms()) {
        MultiKey nk;
        nk.ypow = 0;
        nk.texp.resize(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i)
            nk.texp[static_cast<std::size_t>(i)] =
                k.texp[static_cast<std::size_t>(i)] - a.texp[static_cast<std::size_t>(i)];
        raw.emplace_back(std::move(nk), v / c);
    }
    const int bound = 2 * u.degree_bound() + 1;
    MultiPoly U = MultiPoly::from_terms(l, bound, std::move(raw));

    MultiPoly R = MultiPoly::from_terms(
        l, bound, {{MultiKey{std::vector<int>(static_cast<std::size_t>(l), 0), 0}, Rat(1)}});
    for (int round = 0; round < 100000; ++round) {
        MultiPoly defect = multi_pow(R, p) + multi_scale(U, Rat(-1));
        if (defect.is_zero()) {
            // assemble c^(1/p) * t^(a/p) * R
            std::vector<std::pair<MultiKey, Rat>> res;
            for (const auto& [k, v] : R.terms()) {
                MultiKey nk;
                nk.ypow = 0;
                nk.texp.resize(static_cast<std::size_t>(l));
                for (int i = 0; i < l; ++i)
                    nk.texp[static_cast<std::size_t>(i)] =
                        k.texp[static_cast<std::size_t>(i)] +
                        a.texp[static_cast<std::size_t>(i)] / static_cast<int>(p);
                res.emplace_back(std::move(nk), v * *croot);
            }
            return MultiPoly::from_terms(l, bound, std::move(res));
        }
        const auto& [mk, mc] = *defect.terms().begin();
        // candidate exponent must sit inside the scaled Newton box
        for (int i = 0; i < l; ++i) {
            int scaled = (mk.texp[static_cast<std::size_t>(i)] +
                          a.texp[static_cast<std::size_t>(i)] / static_cast<int>(p)) *
                         static_cast<int>(p);
            if (scaled < lo[static_cast<std::size_t>(i)] || scaled > hi[static_cast<std::size_t>(i)])
                return std::nullopt;
        }
        std::vector<std::pair<MultiKey, Rat>> term{{mk, -mc / Rat(static_cast<unsigned long>(p))}};
        R = R + MultiPoly::from_terms(l, bound, std::move(term));
    }
    return std::nullopt;
}

// Hypothesis of the toric Bertini statement for supported shapes: is
// f(t_1^e, ..., t_l^e, y) irreducible, with e = deg_y f?
std::optional<bool> pullback_hypothesis(const MultiPoly& f, std::uint64_t /*dense_cap*/) {
    const int e = f.y_degree();
    const int l = f.var_count();
    std::vector<std::pair<MultiKey, Rat>> scaled;
    for (const auto& [k, v] : f.terms()) {
        MultiKey nk = k;
        for (auto& x : nk.texp) x *= e;
        scaled.emplace_back(std::move(nk), v);
    }
    MultiPoly fe = MultiPoly::from_terms(l, f.degree_bound() * e, std::move(scaled));

    // split into y-layers
    std::vector<std::vector<std::pair<MultiKey, Rat>>> layers(static_cast<std::size_t>(e) + 1);
    for (const auto& [k, v] : fe.terms()) {
        MultiKey nk = k;
        nk.ypow = 0;
        layers[static_cast<std::size_t>(k.ypow)].emplace_back(std::move(nk), v);
    }
    auto layer = [&](int j) {
        return MultiPoly::from_terms(l, fe.degree_bound(), layers[static_cast<std::size_t>(j)]);
    };

    if (e == 1) return true;

    bool middles_zero = true;
    for (int j = 1; j < e; ++j)
        if (!layer(j).is_zero()) middles_zero = false;

    if (middles_zero) {
        MultiPoly u = multi_scale(layer(0), Rat(-1));
        if (u.is_zero()) return false;  // y^e, e >= 2
        bool constant_u = true;
        for (const auto& [k, v] : u.terms())
            for (int x : k.texp)
                if (x != 0) constant_u = false;
        if (constant_u) return std::nullopt;
        for (unsigned long p : prime_divisors(static_cast<unsigned long>(e)))
            if (multi_nth_root(u, p)) return false;
        if (e % 4 == 0 && multi_nth_root(multi_scale(u, make_rat(-1, 4)), 4)) return false;
        return true;
    }
    if (e == 2) {
        MultiPoly b = layer(1);
        MultiPoly disc = b * b + multi_scale(layer(0), Rat(-4));
        if (disc.is_zero()) return false;
        return !multi_nth_root(disc, 2).has_value();
    }
    return std::nullopt;
}

} // namespace

std::vector<SparsePoly> kronecker_substitute(const MultiPoly& f, const Int& d) {
    std::vector<Int> n;
    Int power(1);
    for (int i = 0; i < f.var_count(); ++i) {
        n.push_back(power);
        power *= d;
    }
    return specialize(f, n);
}

std::optional<std::vector<std::vector<DensePoly>>> capelli_witness(unsigned long m,
                                                                   const DensePoly& u) {
    if (u.degree() < 1) raise(ErrorKind::ConstantInput, "Capelli criterion needs nonconstant u");
    if (m < 1) raise(ErrorKind::CapExceeded, "binomial degree must be at least 1");
    if (m == 1) return std::nullopt;

    for (unsigned long p : prime_divisors(m)) {
        auto v = is_dth_power(u, p);
        if (!v) continue;
        const unsigned long q = m / p;
        std::vector<DensePoly> a(q + 1);
        a[0] = -*v;
        a[q] = DensePoly(Rat(1));
        std::vector<DensePoly> b(q * (p - 1) + 1);
        for (unsigned long i = 0; i < p; ++i)
            b[q * i] = pow(*v, p - 1 - i);
        std::vector<std::vector<DensePoly>> witness{std::move(a), std::move(b)};
        verify_witness(binomial_ypoly(m, u), witness);
        return witness;
    }
    if (m % 4 == 0) {
        auto w = is_dth_power(scale(u, make_rat(-1, 4)), 4);
        if (w) {
            const unsigned long q = m / 4;
            DensePoly w2 = scale(*w * *w, Rat(2));
            DensePoly tw = scale(*w, Rat(2));
            std::vector<DensePoly> a(2 * q + 1), b(2 * q + 1);
            a[0] = w2;
            a[q] = tw;
            a[2 * q] = DensePoly(Rat(1));
            b[0] = w2;
            b[q] = -tw;
            b[2 * q] = DensePoly(Rat(1));
            std::vector<std::vector<DensePoly>> witness{std::move(a), std::move(b)};
            verify_witness(binomial_ypoly(m, u), witness);
            return witness;
        }
    }
    return std::nullopt;
}

bool capelli_irreducible(unsigned long m, const DensePoly& u) {
    return !capelli_witness(m, u).has_value();
}

std::map<long, FiberReport> irreducibility_sweep(const MultiPoly& f, long d_lo, long d_hi,
                                                 std::uint64_t dense_cap) {
    if (!f.is_monic_in_y())
        raise(ErrorKind::NotMonic, "irreducibility sweep requires f monic in y");
    std::map<long, FiberReport> out;
    for (long d = d_lo; d <= d_hi; ++d)
        out.emplace(d, classify_fiber(kronecker_substitute(f, Int(d)), dense_cap));
    return out;
}

BertiniScan bertini_scan(const MultiPoly& f, long n_box,
                         const std::optional<std::vector<Rat>>& theta,
                         std::uint64_t sweep_cap, std::uint64_t dense_cap) {
    if (!f.is_monic_in_y())
        raise(ErrorKind::NotMonic, "bertini scan requires f monic in y");
    const int l = f.var_count();
    if (n_box < 1) raise(ErrorKind::SweepCapExceeded, "box bound must be at least 1");
    Int total = int_pow(Int(n_box), static_cast<unsigned long>(l));
    if (total > Int(static_cast<unsigned long>(sweep_cap)))
        raise(ErrorKind::SweepCapExceeded,
              "box holds " + to_string(total) + " vectors, cap is " +
                  std::to_string(sweep_cap));

    BertiniScan scan;
    scan.pullback_irreducible = pullback_hypothesis(f, dense_cap);

    std::vector<long> n(static_cast<std::size_t>(l), 1);
    while (true) {
        std::vector<Int> nv;
        nv.reserve(n.size());
        for (long x : n) nv.emplace_back(x);
        auto fiber = classify_fiber(specialize(f, nv, theta), dense_cap);
        if (fiber.verdict == Verdict::Unsupported)
            raise(ErrorKind::UnsupportedShape,
                  "fiber shape not supported at an exponent vector");
        if (fiber.verdict == Verdict::Reducible) scan.reducible.push_back(n);

        std::size_t pos = 0;
        while (pos < n.size() && n[pos] == n_box) {
            n[pos] = 1;
            ++pos;
        }
        if (pos == n.size()) break;
        ++n[pos];
    }

    // cluster the recorded vectors into proper sublattices
    if (scan.reducible.empty()) return scan;
    auto to_int = [](const std::vector<long>& v) {
        std::vector<Int> w;
        w.reserve(v.size());
        for (long x : v) w.emplace_back(x);
        return w;
    };
    std::vector<std::vector<Int>> all;
    for (const auto& v : scan.reducible) all.push_back(to_int(v));
    IntMatrix whole = lattice_span(all, static_cast<std::size_t>(l));
    if (lattice_is_proper(whole, static_cast<std::size_t>(l))) {
        scan.lattices.push_back(std::move(whole));
        return scan;
    }

    std::vector<std::vector<std::vector<Int>>> groups;
    std::vector<IntMatrix> bases;
    for (const auto& v : scan.reducible) {
        auto vi = to_int(v);
        bool placed = false;
        for (std::size_t gi = 0; gi < groups.size() && !placed; ++gi) {
            auto cand_vectors = groups[gi];
            cand_vectors.push_back(vi);
            IntMatrix cand = lattice_span(cand_vectors, static_cast<std::size_t>(l));
            if (lattice_is_proper(cand, static_cast<std::size_t>(l))) {
                groups[gi] = std::move(cand_vectors);
                bases[gi] = std::move(cand);
                placed = true;
            }
        }
        if (placed) continue;
        IntMatrix own = lattice_span({vi}, static_cast<std::size_t>(l));
        if (lattice_is_proper(own, static_cast<std::size_t>(l))) {
            groups.push_back({vi});
            bases.push_back(std::move(own));
        } else {
            scan.uncovered.push_back(v);
        }
    }
    for (auto& b : bases) {
        bool dup = false;
        for (const auto& existing : scan.lattices)
            if (existing == b) dup = true;
        if (!dup) scan.lattices.push_back(std::move(b));
    }
    return scan;
}

} // namespace fewnomial
