#ifndef DEGENGA_LINALG_HPP
#define DEGENGA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degenga/rational.hpp"

namespace dga {

// Dense matrix over a field. Sized for 2^n x 2^n with small n; no attempt at
// sparsity or blocking.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, FieldTraits<F>::from_int(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldTraits<F>::from_int(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (is_zero(x.at(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return z;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }

    friend Matrix operator*(const F& c, const Matrix& y) {
        Matrix z = y;
        for (auto& v : z.a_) v = c * v;
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

namespace detail {

// Pivot choice: largest magnitude for floating point, first nonzero for exact
// fields (no rounding, so any nonzero pivot is as good as another).
template <class F>
std::size_t pick_pivot(const Matrix<F>& m, std::size_t col, std::size_t from) {
    if constexpr (!FieldTraits<F>::is_exact) {
        std::size_t best = m.rows();
        double best_abs = 0.0;
        for (std::size_t i = from; i < m.rows(); ++i) {
            double a = std::abs(static_cast<double>(m.at(i, col)));
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        return best;
    } else {
        for (std::size_t i = from; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) return i;
        return m.rows();
    }
}

template <class F>
void swap_rows(Matrix<F>& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

// Reduce to row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> echelonize(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = pick_pivot(m, col, row);
        if (piv == m.rows()) continue;
        swap_rows(m, piv, row);
        F inv_p = FieldTraits<F>::from_int(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = inv_p * m.at(row, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            F f = m.at(i, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(i, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class F>
std::size_t rank(Matrix<F> m) {
    return detail::echelonize(m).size();
}

// Solve A x = b; returns nullopt when the system has no solution (for square
// nonsingular A this is the unique solution).
template <class F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = detail::echelonize(aug);
    for (std::size_t i = pivots.size(); i-- > 0;)
        if (pivots[i] == a.cols()) return std::nullopt;  // inconsistent row
    std::vector<F> x(a.cols(), FieldTraits<F>::from_int(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

// Basis of the right nullspace {x : A x = 0}. One basis vector per free
// column, with the free coordinate set to 1.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto pivots = detail::echelonize(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols(), FieldTraits<F>::from_int(0));
        v[free_col] = FieldTraits<F>::from_int(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] < free_col) v[pivots[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dga

#endif
