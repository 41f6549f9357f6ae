#ifndef FEWNOMIAL_MULTI_POLY_HPP
#define FEWNOMIAL_MULTI_POLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "fewnomial/sparse_poly.hpp"

namespace fewnomial {

// Monomial key of a term in t_1..t_l and y. Exponent entries are small by
// construction (|entry| <= per-variable degree bound), unlike SparsePoly
// exponents.
struct MultiKey {
    std::vector<int> texp;
    int ypow = 0;

    friend bool operator==(const MultiKey&, const MultiKey&) = default;
    friend std::strong_ordering operator<=>(const MultiKey& a, const MultiKey& b) {
        if (a.ypow != b.ypow) return a.ypow <=> b.ypow;
        return a.texp <=> b.texp;
    }
};

// Sparse polynomial in t_1,...,t_l (Laurent allowed) and y with a declared
// per-variable degree bound.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int l, int d) : l_(l), d_(d) {}

    static MultiPoly from_terms(int l, int d,
                                std::vector<std::pair<MultiKey, Rat>> raw);

    int var_count() const { return l_; }
    int degree_bound() const { return d_; }
    const std::map<MultiKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int y_degree() const;
    // True iff the y^deg_y coefficient, as a polynomial in the t's, is the
    // constant 1.
    bool is_monic_in_y() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    int l_ = 0;
    int d_ = 0;
    std::map<MultiKey, Rat> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

// Substitute t_i = theta_i * x^{n_i}; returns the coefficients c_j(x) of y^j,
// j = 0..deg_y(f), so that f(theta_1 x^{n_1},...,y) = sum_j c_j(x) y^j.
std::vector<SparsePoly> specialize(
    const MultiPoly& f, const std::vector<Int>& n,
    const std::optional<std::vector<Rat>>& theta = std::nullopt);

} // namespace fewnomial

#endif
