#include "fewnomial/param.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fewnomial/error.hpp"
#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

namespace {

// compositions of total into `parts` nonnegative summands
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(cur);
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, emit);
        cur.pop_back();
    }
}

Rat multinomial(int total, const std::vector<int>& parts) {
    Int denom(1);
    for (int p : parts) denom *= factorial(static_cast<unsigned long>(p));
    return make_rat(factorial(static_cast<unsigned long>(total)), denom);
}

std::vector<ParamMonomial> expand_monomials(const MultiPoly& f, int B1, int B2,
                                            const EnumCaps& caps) {
    const int l = f.var_count();
    const int d = f.y_degree();
    std::vector<ParamMonomial> out;
    for (const auto& [key, a] : f.terms()) {
        const int i = key.ypow;
        std::vector<int> cur;
        compositions(i, B1, cur, [&](const std::vector<int>& alpha) {
            std::vector<int> cur2;
            compositions(d - i, B2, cur2, [&](const std::vector<int>& beta) {
                ParamMonomial m;
                m.mu.reserve(static_cast<std::size_t>(l + B1 + B2));
                for (int j = 0; j < l; ++j) m.mu.push_back(key.texp[static_cast<std::size_t>(j)]);
                for (int x : alpha) m.mu.push_back(x);
                for (int x : beta) m.mu.push_back(x);
                m.coeff = a * multinomial(i, alpha) * multinomial(d - i, beta);
                m.b1_exp = alpha;
                m.b2_exp = beta;
                // exponent-form coefficients stay bounded by the declared
                // per-variable degree bound
                const long bound =
                    static_cast<long>(f.degree_bound()) * (f.degree_bound() + 1);
                for (long c : m.mu)
                    if (c > bound || c < -bound)
                        raise(ErrorKind::VerificationFailed, "exponent form out of bounds");
                out.push_back(std::move(m));
            });
        });
        if (out.size() > caps.max_monomials)
            raise(ErrorKind::CapExceeded,
                  "expansion has more than " + std::to_string(caps.max_monomials) +
                      " monomials");
    }
    return out;
}

Int bell_number(std::size_t m) {
    // Bell triangle
    std::vector<Int> row{Int(1)};
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<Int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

std::string rgs_string(const std::vector<int>& assign) {
    std::string s;
    for (int a : assign) {
        s += std::to_string(a);
        s += '.';
    }
    return s;
}

ParamSystem build_system(const std::vector<ParamMonomial>& monomials,
                         const std::vector<int>& assign, int nblocks) {
    ParamSystem sys;
    sys.rgs = rgs_string(assign);
    sys.blocks.assign(static_cast<std::size_t>(nblocks), {});
    for (std::size_t i = 0; i < assign.size(); ++i)
        sys.blocks[static_cast<std::size_t>(assign[i])].push_back(static_cast<int>(i));

    const std::size_t width = monomials.front().mu.size();
    std::vector<std::vector<Int>> rows;
    for (const auto& block : sys.blocks) {
        for (std::size_t t = 1; t < block.size(); ++t) {
            std::vector<Int> row(width);
            for (std::size_t j = 0; j < width; ++j)
                row[j] = Int(monomials[static_cast<std::size_t>(block[0])].mu[j] -
                             monomials[static_cast<std::size_t>(block[t])].mu[j]);
            rows.push_back(std::move(row));
        }
        CoeffEquation eq;
        for (int idx : block) {
            const auto& m = monomials[static_cast<std::size_t>(idx)];
            eq.push_back(CoeffTerm{m.coeff, m.b1_exp, m.b2_exp});
        }
        sys.coeff_equations.push_back(std::move(eq));
    }
    sys.linear = IntMatrix::from_rows(std::move(rows));

    // solution lattice: left kernel of the transposed equation matrix
    IntMatrix t(sys.linear.cols, sys.linear.rows);
    for (std::size_t i = 0; i < sys.linear.rows; ++i)
        for (std::size_t j = 0; j < sys.linear.cols; ++j) t.m[j][i] = sys.linear.m[i][j];
    sys.solution_lattice = hnf(t).kernel;

    for (int a = 0; a < nblocks; ++a)
        for (int b = a + 1; b < nblocks; ++b)
            sys.distinct_mu_pairs.emplace_back(sys.blocks[static_cast<std::size_t>(a)][0],
                                               sys.blocks[static_cast<std::size_t>(b)][0]);
    return sys;
}

} // namespace

MultiPoly default_param_template(int d, int l) {
    std::vector<std::pair<MultiKey, Rat>> raw;
    raw.emplace_back(MultiKey{std::vector<int>(static_cast<std::size_t>(l), 0), d}, Rat(1));
    for (int i = 0; i < l; ++i) {
        MultiKey k;
        k.ypow = 0;
        k.texp.assign(static_cast<std::size_t>(l), 0);
        k.texp[static_cast<std::size_t>(i)] = 1;
        raw.emplace_back(std::move(k), Rat(-1));
    }
    return MultiPoly::from_terms(l, d, std::move(raw));
}

ParamEnumeration enumerate_systems_for(const MultiPoly& f, int B1, int B2,
                                       const EnumCaps& caps) {
    if (f.is_zero() || f.y_degree() < 1)
        raise(ErrorKind::NotMonic, "enumeration needs deg_y f >= 1");
    if (B1 < 0 || B2 < 1)
        raise(ErrorKind::CapExceeded, "denominator needs at least one term");

    ParamEnumeration out;
    out.l = f.var_count();
    out.d = f.y_degree();
    out.b1 = B1;
    out.b2 = B2;
    out.monomials = expand_monomials(f, B1, B2, caps);

    const std::size_t M = out.monomials.size();
    if (M == 0) {
        // trivial identity (e.g. a zero numerator against f divisible by y):
        // the unique partition of the empty expansion, with no constraints
        const std::size_t width =
            static_cast<std::size_t>(out.l) + static_cast<std::size_t>(B1 + B2);
        ParamSystem sys;
        sys.linear = IntMatrix(0, width);
        sys.solution_lattice = IntMatrix::identity(width);
        out.systems.push_back(std::move(sys));
        return out;
    }
    if (bell_number(M) > Int(static_cast<unsigned long>(caps.max_partitions)))
        raise(ErrorKind::CapExceeded,
              "partition count " + to_string(bell_number(M)) + " exceeds cap " +
                  std::to_string(caps.max_partitions));

    // enumerate restricted growth strings
    std::vector<int> assign(M, 0);
    auto rec = [&](auto&& self, std::size_t pos, int maxval) -> void {
        if (pos == M) {
            std::vector<std::size_t> block_sizes(static_cast<std::size_t>(maxval) + 1, 0);
            for (int a : assign) ++block_sizes[static_cast<std::size_t>(a)];
            for (std::size_t s : block_sizes)
                if (s == 1) return;  // singleton forces a b-coefficient to vanish
            out.systems.push_back(build_system(out.monomials, assign, maxval + 1));
            return;
        }
        for (int v = 0; v <= maxval + 1; ++v) {
            assign[pos] = v;
            self(self, pos + 1, std::max(maxval, v));
        }
        assign[pos] = 0;
    };
    if (M > 0) {
        assign[0] = 0;
        rec(rec, 1, 0);
    }
    return out;
}

ParamEnumeration enumerate_systems(int d, int l, int B, const EnumCaps& caps) {
    if (B < 1) raise(ErrorKind::CapExceeded, "term counts must be at least 1");
    return enumerate_systems_for(default_param_template(d, l), B, B, caps);
}

CandidateReport check_candidate(const MultiPoly& f, const std::vector<Int>& n,
                                const SparsePoly& g1, const SparsePoly& g2,
                                const EnumCaps& caps) {
    if (g2.is_zero()) raise(ErrorKind::ZeroDenominator, "candidate denominator is zero");
    if (static_cast<int>(n.size()) != f.var_count())
        raise(ErrorKind::LengthMismatch, "exponent vector length != l");
    const int d = f.y_degree();

    // exact verification of sum a_{ik} g1^i g2^{d-i} x^{n.k} = 0
    std::vector<SparsePoly> pow1(static_cast<std::size_t>(d) + 1), pow2(pow1.size());
    for (int i = 0; i <= d; ++i) {
        pow1[static_cast<std::size_t>(i)] = pow(g1, static_cast<unsigned long>(i));
        pow2[static_cast<std::size_t>(i)] = pow(g2, static_cast<unsigned long>(i));
    }
    SparsePoly total;
    for (const auto& [key, a] : f.terms()) {
        Int shift(0);
        for (int j = 0; j < f.var_count(); ++j)
            shift += n[static_cast<std::size_t>(j)] * key.texp[static_cast<std::size_t>(j)];
        SparsePoly term = pow1[static_cast<std::size_t>(key.ypow)] *
                          pow2[static_cast<std::size_t>(d - key.ypow)];
        total = total + scale(shift_exp(term, shift), a);
    }
    if (!total.is_zero())
        raise(ErrorKind::VerificationFailed, "candidate does not satisfy the equation");

    // a zero numerator is allowed: only the i = 0 layer of f contributes
    const int B1 = static_cast<int>(g1.term_count());
    const int B2 = static_cast<int>(g2.term_count());
    auto monomials = expand_monomials(f, B1, B2, caps);

    // concrete mu values and gamma coefficients
    const int l = f.var_count();
    CandidateReport report;
    std::map<Int, std::vector<std::size_t>> groups;
    std::vector<Int> mu_values(monomials.size());
    for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
        const auto& m = monomials[idx];
        Int mu(0);
        for (int j = 0; j < l; ++j)
            mu += n[static_cast<std::size_t>(j)] * m.mu[static_cast<std::size_t>(j)];
        for (int t = 0; t < B1; ++t)
            mu += g1.terms()[static_cast<std::size_t>(t)].exp *
                  m.mu[static_cast<std::size_t>(l + t)];
        for (int t = 0; t < B2; ++t)
            mu += g2.terms()[static_cast<std::size_t>(t)].exp *
                  m.mu[static_cast<std::size_t>(l + B1 + t)];
        mu_values[idx] = mu;
        groups[mu].push_back(idx);
    }

    // canonical partition: blocks labeled by first appearance
    std::vector<int> assign(monomials.size(), -1);
    int next_label = 0;
    for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
        if (assign[idx] >= 0) continue;
        for (std::size_t other : groups[mu_values[idx]]) assign[other] = next_label;
        ++next_label;
    }
    report.partition_rgs = rgs_string(assign);

    // residual: every collision class must cancel
    report.residual_ok = true;
    for (const auto& [mu, idxs] : groups) {
        Rat sum(0);
        for (std::size_t idx : idxs) {
            const auto& m = monomials[idx];
            Rat gamma = m.coeff;
            for (int t = 0; t < B1; ++t)
                gamma *= rat_pow(g1.terms()[static_cast<std::size_t>(t)].coeff,
                                 m.b1_exp[static_cast<std::size_t>(t)]);
            for (int t = 0; t < B2; ++t)
                gamma *= rat_pow(g2.terms()[static_cast<std::size_t>(t)].coeff,
                                 m.b2_exp[static_cast<std::size_t>(t)]);
            sum += gamma;
        }
        if (sum != 0) report.residual_ok = false;
    }

    // match against the enumerated systems when the partition cap allows
    if (bell_number(monomials.size()) <= Int(static_cast<unsigned long>(caps.max_partitions))) {
        auto enumeration = enumerate_systems_for(f, B1, B2, caps);
        report.enumeration_checked = true;
        for (std::size_t i = 0; i < enumeration.systems.size(); ++i)
            if (enumeration.systems[i].rgs == report.partition_rgs) {
                report.matched_index = static_cast<int>(i);
                break;
            }
    }
    return report;
}

} // namespace fewnomial
