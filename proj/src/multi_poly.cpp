#include "fewnomial/multi_poly.hpp"

#include <cstdlib>

#include "fewnomial/error.hpp"

namespace fewnomial {

MultiPoly MultiPoly::from_terms(int l, int d,
                                std::vector<std::pair<MultiKey, Rat>> raw) {
    MultiPoly f(l, d);
    for (auto& [key, coeff] : raw) {
        if (coeff == 0) continue;
        if (static_cast<int>(key.texp.size()) != l)
            raise(ErrorKind::LengthMismatch, "exponent vector length != l");
        if (key.ypow < 0 || key.ypow > d)
            raise(ErrorKind::DegreeCapExceeded, "y-power outside [0, d]");
        for (int e : key.texp)
            if (std::abs(e) > d)
                raise(ErrorKind::DegreeCapExceeded, "t-exponent exceeds degree bound");
        auto [it, fresh] = f.terms_.try_emplace(std::move(key), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) f.terms_.erase(it);
        }
    }
    return f;
}

int MultiPoly::y_degree() const {
    int deg = 0;
    for (const auto& [key, coeff] : terms_) deg = std::max(deg, key.ypow);
    return deg;
}

bool MultiPoly::is_monic_in_y() const {
    if (terms_.empty()) return false;
    int dy = y_degree();
    if (dy == 0) return false;
    for (const auto& [key, coeff] : terms_) {
        if (key.ypow != dy) continue;
        for (int e : key.texp)
            if (e != 0) return false;
        if (coeff != 1) return false;
    }
    return true;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.var_count() != b.var_count())
        raise(ErrorKind::LengthMismatch, "variable counts differ");
    std::vector<std::pair<MultiKey, Rat>> raw(a.terms().begin(), a.terms().end());
    raw.insert(raw.end(), b.terms().begin(), b.terms().end());
    return MultiPoly::from_terms(a.var_count(),
                                 std::max(a.degree_bound(), b.degree_bound()),
                                 std::move(raw));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.var_count() != b.var_count())
        raise(ErrorKind::LengthMismatch, "variable counts differ");
    const int l = a.var_count();
    std::vector<std::pair<MultiKey, Rat>> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            MultiKey k;
            k.ypow = ka.ypow + kb.ypow;
            k.texp.resize(l);
            for (int i = 0; i < l; ++i) k.texp[i] = ka.texp[i] + kb.texp[i];
            raw.emplace_back(std::move(k), ca * cb);
        }
    }
    return MultiPoly::from_terms(l, a.degree_bound() + b.degree_bound(),
                                 std::move(raw));
}

std::vector<SparsePoly> specialize(const MultiPoly& f, const std::vector<Int>& n,
                                   const std::optional<std::vector<Rat>>& theta) {
    const int l = f.var_count();
    if (static_cast<int>(n.size()) != l)
        raise(ErrorKind::LengthMismatch, "exponent vector has length " +
                                             std::to_string(n.size()) + ", expected " +
                                             std::to_string(l));
    if (theta) {
        if (static_cast<int>(theta->size()) != l)
            raise(ErrorKind::LengthMismatch, "theta vector has wrong length");
        for (const Rat& c : *theta)
            if (c == 0) raise(ErrorKind::ZeroDenominator, "theta entries must be nonzero");
    }

    const int dy = f.y_degree();
    std::vector<std::vector<Term>> raw(static_cast<std::size_t>(dy) + 1);
    for (const auto& [key, coeff] : f.terms()) {
        Int exp(0);
        Rat c = coeff;
        for (int i = 0; i < l; ++i) {
            if (key.texp[i] == 0) continue;
            exp += n[static_cast<std::size_t>(i)] * key.texp[i];
            if (theta) c *= rat_pow((*theta)[static_cast<std::size_t>(i)], key.texp[i]);
        }
        raw[static_cast<std::size_t>(key.ypow)].push_back(Term{std::move(exp), std::move(c)});
    }

    std::vector<SparsePoly> out;
    out.reserve(raw.size());
    for (auto& terms : raw) out.push_back(SparsePoly::from_terms(std::move(terms)));
    return out;
}

} // namespace fewnomial
