#pragma once

// Exact integer and rational linear algebra: Smith normal form, rank,
// determinants, affine system solving and the lattice predicates behind
// the splitness and unimodularity conditions.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace hypertoric {

/// Dense row-major matrix over an exact ring (Integer or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw InvalidInput("matrix entry count does not match its shape");
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
            for (long x : r) entries_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
        return I;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix M(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw InvalidInput("column length does not match row count");
            for (std::size_t i = 0; i < rows; ++i) M(i, j) = cols[j][i];
        }
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<T>& entries() const { return entries_; }

    T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < idx.size(); ++k) out(r, k) = (*this)(r, idx[k]);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
    }
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& factor) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntegerMatrix& M) {
    std::vector<Rational> e(M.entries().begin(), M.entries().end());
    return RationalMatrix(M.rows(), M.cols(), std::move(e));
}

/// U * M * V = D with U, V unimodular and D diagonal with d_k | d_{k+1}, d_k >= 0.
struct SNFResult {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    /// Nonzero diagonal entries of D, in order.
    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

// Position of the nonzero entry of smallest magnitude in the trailing block,
// first in row-major order among ties.
inline bool find_pivot(const IntegerMatrix& A, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < A.rows(); ++i)
        for (std::size_t j = t; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            Integer mag = abs(A(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace detail

/// Smith normal form by gcd-pivot elimination; the pivot is always the entry
/// of least magnitude in the remaining block.
inline SNFResult smith_normal_form(const IntegerMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    IntegerMatrix A = M;
    IntegerMatrix U = IntegerMatrix::identity(r);
    IntegerMatrix V = IntegerMatrix::identity(c);

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        std::size_t pr = t, pc = t;
        if (!detail::find_pivot(A, t, pr, pc)) break;
        A.swap_rows(t, pr);
        U.swap_rows(t, pr);
        A.swap_cols(t, pc);
        V.swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (A(i, t) == 0) continue;
                Integer q = trunc_div(A(i, t), A(t, t));
                A.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (A(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (A(t, j) == 0) continue;
                Integer q = trunc_div(A(t, j), A(t, t));
                A.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (A(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder is now smaller than the pivot: move it to the pivot slot.
                std::size_t best_i = t, best_j = t;
                Integer best = abs(A(t, t));
                for (std::size_t i = t + 1; i < r; ++i)
                    if (A(i, t) != 0 && abs(A(i, t)) < best) {
                        best = abs(A(i, t));
                        best_i = i;
                        best_j = t;
                    }
                for (std::size_t j = t + 1; j < c; ++j)
                    if (A(t, j) != 0 && abs(A(t, j)) < best) {
                        best = abs(A(t, j));
                        best_i = t;
                        best_j = j;
                    }
                A.swap_rows(t, best_i);
                U.swap_rows(t, best_i);
                A.swap_cols(t, best_j);
                V.swap_cols(t, best_j);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!divides(A(t, t), A(i, j))) {
                        A.add_row(t, i, Integer(1));
                        U.add_row(t, i, Integer(1));
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(U), std::move(A), std::move(V)};
}

/// Rank over Q by fraction-free (Bareiss) elimination.
template <class T>
std::size_t rank(const Matrix<T>& M) {
    Matrix<T> A = M;
    std::size_t rk = 0;
    T prev = 1;
    for (std::size_t col = 0; col < A.cols() && rk < A.rows(); ++col) {
        std::size_t piv = rk;
        while (piv < A.rows() && A(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        A.swap_rows(rk, piv);
        for (std::size_t i = rk + 1; i < A.rows(); ++i) {
            for (std::size_t j = col + 1; j < A.cols(); ++j)
                A(i, j) = (A(rk, col) * A(i, j) - A(i, col) * A(rk, j)) / prev;
            A(i, col) = 0;
        }
        prev = A(rk, col);
        ++rk;
    }
    return rk;
}

/// Determinant by fraction-free elimination; exact for Integer and Rational.
template <class T>
T determinant(const Matrix<T>& M) {
    if (M.rows() != M.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return T(1);
    Matrix<T> A = M;
    T prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && A(piv, k) == 0) ++piv;
            if (piv == n) return T(0);
            A.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign > 0 ? T(A(n - 1, n - 1)) : T(-A(n - 1, n - 1));
}

/// Outcome of solving A x = b over Q.
struct AffineSolution {
    bool feasible = false;
    RationalVector particular;
    std::vector<RationalVector> kernel_basis;
};

/// Solves A x = b exactly. Infeasible exactly when rank([A|b]) > rank(A).
/// The particular solution sets every free variable to zero; the kernel basis
/// has one vector per free column, in column order.
inline AffineSolution solve_affine(const IntegerMatrix& A, const RationalVector& b) {
    if (A.rows() != b.size()) throw InvalidInput("solve_affine: row count differs from right-hand side length");
    const std::size_t rows = A.rows(), cols = A.cols();
    RationalMatrix R(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) R(i, j) = A(i, j);
        R(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col <= cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && R(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (col == cols) return {};  // pivot in the augmented column
        R.swap_rows(r, piv);
        Rational inv = 1 / R(r, col);
        for (std::size_t j = 0; j <= cols; ++j) R(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || R(i, col) == 0) continue;
            Rational f = -R(i, col);
            R.add_row(i, r, f);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    // Remaining rows are zero in A; they must be zero in b as well.
    for (std::size_t i = r; i < rows; ++i)
        if (R(i, cols) != 0) return {};

    AffineSolution sol;
    sol.feasible = true;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.particular[pivot_cols[k]] = R(k, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto pc : pivot_cols) is_pivot[pc] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -R(k, f);
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

/// True iff B : Z^m -> Z^n is onto, i.e. its Smith form has n invariant
/// factors, all equal to 1. Such a surjection always splits.
inline bool is_split_surjection(const IntegerMatrix& B) {
    if (B.rows() > B.cols() || B.rows() == 0) return false;
    auto f = smith_normal_form(B).invariant_factors();
    return f.size() == B.rows() && std::all_of(f.begin(), f.end(), [](const Integer& d) { return d == 1; });
}

/// True iff the given integer vectors extend to a basis of Z^n.
inline bool is_basis_extendable(const std::vector<IntegerVector>& cols) {
    if (cols.empty()) throw InvalidInput("is_basis_extendable: empty vector list");
    const std::size_t n = cols.front().size();
    if (cols.size() > n) return false;
    auto M = IntegerMatrix::from_columns(n, cols);
    auto f = smith_normal_form(M).invariant_factors();
    return f.size() == cols.size() && std::all_of(f.begin(), f.end(), [](const Integer& d) { return d == 1; });
}

}  // namespace hypertoric
