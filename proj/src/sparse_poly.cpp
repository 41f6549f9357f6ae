#include "fewnomial/sparse_poly.hpp"

#include <algorithm>
#include <map>

#include "fewnomial/error.hpp"

namespace fewnomial {

namespace {

void check_budget(std::size_t n, std::uint64_t budget) {
    if (n > budget)
        raise(ErrorKind::TermBudgetExceeded,
              "intermediate term count " + std::to_string(n) + " exceeds budget " +
                  std::to_string(budget));
}

SparsePoly from_map(std::map<Int, Rat>&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back(Term{e, std::move(c)});
    return SparsePoly::from_terms(std::move(out));
}

} // namespace

SparsePoly::SparsePoly(const Rat& constant) {
    if (constant != 0) terms_.push_back(Term{Int(0), constant});
}

SparsePoly SparsePoly::monomial(const Rat& coeff, const Int& exp) {
    SparsePoly p;
    if (coeff != 0) p.terms_.push_back(Term{exp, coeff});
    return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    SparsePoly p;
    p.terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Int& SparsePoly::ord() const {
    if (terms_.empty()) raise(ErrorKind::ZeroPolynomial, "ord of zero polynomial");
    return terms_.front().exp;
}

const Int& SparsePoly::deg() const {
    if (terms_.empty()) raise(ErrorKind::ZeroPolynomial, "deg of zero polynomial");
    return terms_.back().exp;
}

bool SparsePoly::is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff == 0) return false;
        if (i > 0 && !(terms_[i - 1].exp < terms_[i].exp)) return false;
        Rat c = terms_[i].coeff;
        c.canonicalize();
        if (c != terms_[i].coeff) return false;
    }
    return true;
}

Rat SparsePoly::coeff_at(const Int& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Int& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Rat(0);
}

Rat SparsePoly::eval_special(int point) const {
    if (point == 0) {
        if (!terms_.empty() && ord() < 0)
            raise(ErrorKind::DivisionByZero, "Laurent polynomial has a pole at 0");
        return coeff_at(Int(0));
    }
    Rat sum(0);
    for (const auto& t : terms_) {
        if (point == 1 || mpz_even_p(t.exp.get_mpz_t()))
            sum += t.coeff;
        else
            sum -= t.coeff;
    }
    return sum;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    std::vector<Term> merged;
    merged.reserve(a.term_count() + b.term_count());
    merged.insert(merged.end(), a.terms().begin(), a.terms().end());
    merged.insert(merged.end(), b.terms().begin(), b.terms().end());
    return SparsePoly::from_terms(std::move(merged));
}

SparsePoly operator-(const SparsePoly& a) {
    std::vector<Term> out;
    out.reserve(a.term_count());
    for (const auto& t : a.terms()) out.push_back(Term{t.exp, -t.coeff});
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly mul(const SparsePoly& a, const SparsePoly& b, std::uint64_t term_budget) {
    std::map<Int, Rat> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
        }
        check_budget(acc.size(), term_budget);
    }
    return from_map(std::move(acc));
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    return mul(a, b, kUnlimitedBudget);
}

SparsePoly pow(const SparsePoly& p, unsigned long k, std::uint64_t term_budget) {
    SparsePoly result(Rat(1));
    SparsePoly base = p;
    while (k > 0) {
        if (k & 1) result = mul(result, base, term_budget);
        k >>= 1;
        if (k > 0) base = mul(base, base, term_budget);
    }
    return result;
}

SparsePoly scale(const SparsePoly& p, const Rat& c) {
    if (c == 0) return SparsePoly{};
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) out.push_back(Term{t.exp, t.coeff * c});
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly shift_exp(const SparsePoly& p, const Int& shift) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) out.push_back(Term{t.exp + shift, t.coeff});
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly truncate(const SparsePoly& p, const Int& cutoff) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.exp >= cutoff) break;
        out.push_back(t);
    }
    return SparsePoly::from_terms(std::move(out));
}

SparsePoly series_inv(const SparsePoly& u, const Int& cutoff, std::uint64_t term_budget) {
    if (u.is_zero() || u.ord() != 0)
        raise(ErrorKind::NotAUnit, "series_inv requires a unit (nonzero constant term)");
    if (cutoff <= 0) return SparsePoly{};

    const SparsePoly two(Rat(2));
    SparsePoly v(Rat(1) / u.terms().front().coeff);
    Int prec(1);
    while (prec < cutoff) {
        prec *= 2;
        if (prec > cutoff) prec = cutoff;
        SparsePoly uv = mul(truncate(u, prec), v, term_budget);
        v = truncate(mul(v, two - truncate(uv, prec), term_budget), prec);
        check_budget(v.term_count(), term_budget);
    }
    return v;
}

int compare(const SparsePoly& a, const SparsePoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = cmp(ta[i].exp, tb[i].exp);
        if (c != 0) return c;
        c = cmp(ta[i].coeff, tb[i].coeff);
        if (c != 0) return c;
    }
    if (ta.size() < tb.size()) return -1;
    if (ta.size() > tb.size()) return 1;
    return 0;
}

} // namespace fewnomial
