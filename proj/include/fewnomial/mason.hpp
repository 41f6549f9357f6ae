#ifndef FEWNOMIAL_MASON_HPP
#define FEWNOMIAL_MASON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fewnomial/rational_function.hpp"

namespace fewnomial {

// A place of Q(x): a monic irreducible polynomial, or the place at infinity.
struct Place {
    std::optional<DensePoly> finite;  // nullopt = infinity

    bool is_infinity() const { return !finite.has_value(); }
    long place_degree() const { return is_infinity() ? 1 : finite->degree(); }

    friend bool operator==(const Place&, const Place&) = default;
};

// Canonical order: finite places by polynomial order, infinity last.
bool place_less(const Place& a, const Place& b);

// Order of f at the place: multiplicity in the numerator minus multiplicity
// in the denominator; at infinity deg(den) - deg(num).
long valuation(const RationalFunction& f, const Place& v);

struct MasonPlaceRow {
    Place place;
    long v_sigma;
    long min_v_phi;
};

struct MasonReport {
    int n = 0;
    int r = 0;
    int genus = 0;  // the checker is specialized to Q(x)
    std::vector<MasonPlaceRow> per_place;
    long lhs = 0;
    long rhs = 0;
    bool holds = false;
};

// Exact check of the S-unit inequality
//   sum_{v in S} (v(sigma) - min_i v(phi_i))
//     <= C(n,2) (#S + 2g - 2) + sum_{i>r} deg(phi_i)
// over Q(x), with S = all poles of the phi_i plus all zeros of phi_1..phi_r
// (including infinity when the degree comparison demands it).
MasonReport check(const std::vector<RationalFunction>& phi, int r);

// Deterministic generator of valid check() inputs (n <= 5, degrees <= 12).
std::pair<std::vector<RationalFunction>, int> random_instance(std::uint64_t seed);

} // namespace fewnomial

#endif
