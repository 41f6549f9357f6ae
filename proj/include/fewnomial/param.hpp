#ifndef FEWNOMIAL_PARAM_HPP
#define FEWNOMIAL_PARAM_HPP

#include <string>
#include <vector>

#include "fewnomial/intmatrix.hpp"
#include "fewnomial/multi_poly.hpp"

namespace fewnomial {

struct EnumCaps {
    std::size_t max_monomials = 64;
    std::size_t max_partitions = 100000;
};

// One expanded monomial gamma * x^mu of the identity
//   sum_{i,k} a_{ik} g1(x)^i g2(x)^{d-i} x^{n.k} = 0,
// where g_r(x) = sum_m b_{r,m} x^{n_{r,m}}.
struct ParamMonomial {
    // mu as a linear form over the unknowns, ordered
    // n_1..n_l, n_{1,1}..n_{1,B1}, n_{2,1}..n_{2,B2}.
    std::vector<long> mu;
    Rat coeff;                // a_{ik} times the multinomial factors
    std::vector<int> b1_exp;  // powers of b_{1,m} in gamma
    std::vector<int> b2_exp;  // powers of b_{2,m} in gamma
};

struct CoeffTerm {
    Rat coeff;
    std::vector<int> b1_exp;
    std::vector<int> b2_exp;
};
using CoeffEquation = std::vector<CoeffTerm>;  // terms summing to zero

struct ParamSystem {
    std::vector<std::vector<int>> blocks;  // partition of monomial indices
    std::string rgs;                       // canonical partition id
    IntMatrix linear;                      // rows: mu equalities within blocks
    IntMatrix solution_lattice;            // integer solutions of the rows
    std::vector<CoeffEquation> coeff_equations;
    // metadata: representatives of distinct blocks whose mu must differ
    std::vector<std::pair<int, int>> distinct_mu_pairs;
};

struct ParamEnumeration {
    int l = 0;
    int d = 0;
    int b1 = 0;
    int b2 = 0;
    std::vector<ParamMonomial> monomials;
    std::vector<ParamSystem> systems;
};

// Enumerate the exponent-collision systems for an explicit template f with
// g1, g2 having B1 and B2 terms. Partitions with a singleton block are
// pruned (a lone monomial would force one of its b-symbols to vanish).
ParamEnumeration enumerate_systems_for(const MultiPoly& f, int B1, int B2,
                                       const EnumCaps& caps = {});

// Default template for the (d, l, B) enumeration: y^d - t_1 - ... - t_l,
// matching the equation family the expansion strategy is built around.
MultiPoly default_param_template(int d, int l);

ParamEnumeration enumerate_systems(int d, int l, int B, const EnumCaps& caps = {});

struct CandidateReport {
    std::string partition_rgs;
    bool residual_ok = false;
    bool enumeration_checked = false;
    int matched_index = -1;  // index into enumerate_systems_for(...) output
};

// Verify f(x^{n_1},...,x^{n_l}, g1/g2) = 0 exactly, compute the concrete
// exponent-collision partition and confirm it appears in the enumeration
// (when within caps).
CandidateReport check_candidate(const MultiPoly& f, const std::vector<Int>& n,
                                const SparsePoly& g1, const SparsePoly& g2,
                                const EnumCaps& caps = {});

} // namespace fewnomial

#endif
