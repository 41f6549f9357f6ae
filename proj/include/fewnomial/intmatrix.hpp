#ifndef FEWNOMIAL_INTMATRIX_HPP
#define FEWNOMIAL_INTMATRIX_HPP

#include <vector>

#include "fewnomial/rational.hpp"

namespace fewnomial {

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Int>> m;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), m(r, std::vector<Int>(c, Int(0))) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows_in);

    Int& at(std::size_t i, std::size_t j) { return m[i][j]; }
    const Int& at(std::size_t i, std::size_t j) const { return m[i][j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct HnfResult {
    IntMatrix h;       // row Hermite normal form, U * M = H
    IntMatrix u;       // unimodular transform
    IntMatrix kernel;  // canonical basis (HNF) of {v : v * M = 0}
};

// Row-style Hermite normal form with transform and left-kernel basis,
// exact integer arithmetic throughout.
HnfResult hnf(const IntMatrix& M);

// Exact determinant (Bareiss fraction-free elimination); square input.
Int determinant(const IntMatrix& M);

// HNF basis of the lattice generated by the given vectors (zero rows
// dropped).
IntMatrix lattice_span(const std::vector<std::vector<Int>>& vectors, std::size_t dim);

// Membership of v in the row lattice of an HNF basis.
bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);

// A sublattice of Z^dim is proper iff its rank is below dim or its index is
// greater than 1.
bool lattice_is_proper(const IntMatrix& basis, std::size_t dim);

} // namespace fewnomial

#endif
