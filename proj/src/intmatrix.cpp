#include "fewnomial/intmatrix.hpp"

#include <algorithm>

#include "fewnomial/error.hpp"

namespace fewnomial {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.m[i][i] = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows_in) {
    IntMatrix M;
    M.rows = rows_in.size();
    M.cols = rows_in.empty() ? 0 : rows_in.front().size();
    for (const auto& r : rows_in)
        if (r.size() != M.cols)
            raise(ErrorKind::LengthMismatch, "ragged matrix rows");
    M.m = std::move(rows_in);
    return M;
}

namespace {

bool row_is_zero(const std::vector<Int>& r) {
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

// In-place row HNF; returns the pivot column of each pivot row. When track
// is non-null the same row operations are applied to it.
std::vector<std::size_t> hnf_in_place(IntMatrix& A, IntMatrix* track) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        // Euclidean elimination in column c among rows >= r.
        while (true) {
            std::size_t best = A.rows;
            for (std::size_t i = r; i < A.rows; ++i) {
                if (A.m[i][c] == 0) continue;
                if (best == A.rows ||
                    cmp(abs(A.m[i][c]), abs(A.m[best][c])) < 0)
                    best = i;
            }
            if (best == A.rows) break;  // column clear below r
            std::swap(A.m[r], A.m[best]);
            if (track) std::swap(track->m[r], track->m[best]);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < A.rows; ++i) {
                if (A.m[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.m[i][c].get_mpz_t(), A.m[r][c].get_mpz_t());
                for (std::size_t j = 0; j < A.cols; ++j) A.m[i][j] -= q * A.m[r][j];
                if (track)
                    for (std::size_t j = 0; j < track->cols; ++j)
                        track->m[i][j] -= q * track->m[r][j];
                if (A.m[i][c] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (A.m[r][c] == 0) continue;
        if (A.m[r][c] < 0) {
            for (auto& x : A.m[r]) x = -x;
            if (track)
                for (auto& x : track->m[r]) x = -x;
        }
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            if (A.m[i][c] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A.m[i][c].get_mpz_t(), A.m[r][c].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < A.cols; ++j) A.m[i][j] -= q * A.m[r][j];
            if (track)
                for (std::size_t j = 0; j < track->cols; ++j)
                    track->m[i][j] -= q * track->m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

HnfResult hnf(const IntMatrix& M) {
    if (M.rows == 0) raise(ErrorKind::LengthMismatch, "hnf of an empty matrix");
    HnfResult out;
    out.h = M;
    out.u = IntMatrix::identity(M.rows);
    hnf_in_place(out.h, &out.u);

    std::vector<std::vector<Int>> kernel_rows;
    for (std::size_t i = 0; i < M.rows; ++i)
        if (row_is_zero(out.h.m[i])) kernel_rows.push_back(out.u.m[i]);
    if (kernel_rows.empty()) {
        out.kernel = IntMatrix(0, M.rows);
    } else {
        IntMatrix K = IntMatrix::from_rows(std::move(kernel_rows));
        hnf_in_place(K, nullptr);
        while (K.rows > 0 && row_is_zero(K.m[K.rows - 1])) {
            K.m.pop_back();
            --K.rows;
        }
        out.kernel = std::move(K);
    }
    return out;
}

Int determinant(const IntMatrix& M) {
    if (M.rows != M.cols) raise(ErrorKind::LengthMismatch, "determinant of non-square matrix");
    const std::size_t n = M.rows;
    if (n == 0) return Int(1);
    // Bareiss fraction-free elimination.
    IntMatrix A = M;
    Int sign(1);
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && A.m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(A.m[k], A.m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                A.m[i][j] = (A.m[i][j] * A.m[k][k] - A.m[i][k] * A.m[k][j]) / prev;
            }
            A.m[i][k] = 0;
        }
        prev = A.m[k][k];
    }
    return sign * A.m[n - 1][n - 1];
}

IntMatrix lattice_span(const std::vector<std::vector<Int>>& vectors, std::size_t dim) {
    if (vectors.empty()) return IntMatrix(0, dim);
    IntMatrix A = IntMatrix::from_rows(vectors);
    if (A.cols != dim) raise(ErrorKind::LengthMismatch, "vector dimension mismatch");
    hnf_in_place(A, nullptr);
    while (A.rows > 0 && row_is_zero(A.m[A.rows - 1])) {
        A.m.pop_back();
        --A.rows;
    }
    return A;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
    if (v.size() != basis.cols) raise(ErrorKind::LengthMismatch, "vector dimension mismatch");
    std::vector<Int> w = v;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t p = 0;
        while (p < basis.cols && basis.m[i][p] == 0) ++p;
        if (p == basis.cols) continue;
        if (w[p] == 0) continue;
        if (!mpz_divisible_p(w[p].get_mpz_t(), basis.m[i][p].get_mpz_t())) return false;
        Int q = w[p] / basis.m[i][p];
        for (std::size_t j = 0; j < basis.cols; ++j) w[j] -= q * basis.m[i][j];
    }
    return row_is_zero(w);
}

bool lattice_is_proper(const IntMatrix& basis, std::size_t dim) {
    if (basis.rows < dim) return true;
    // full rank: proper iff the product of the pivots exceeds 1
    Int index(1);
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t p = 0;
        while (p < basis.cols && basis.m[i][p] == 0) ++p;
        if (p == basis.cols) continue;
        index *= basis.m[i][p];
    }
    return cmp(abs(index), 1) > 0;
}

} // namespace fewnomial
