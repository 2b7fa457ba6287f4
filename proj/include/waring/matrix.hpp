#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

// Dense matrix over Q, row-major. Every dimension count in the pipeline is
// an exact rank or nullity of one of these.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw InputError("matrix entry count does not match dimensions");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

namespace detail {

// Clears denominators row by row; rank is invariant under scaling a row by
// a positive integer.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer den = denominator(m(i, j));
            scale = boost::multiprecision::lcm(scale, den);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
        }
    }
    return out;
}

} // namespace detail

// Exact rank over Q by fraction-free (Bareiss) elimination. Pivot: largest
// absolute value in the current column, ties broken by lowest row index.
inline std::size_t rank(const RationalMatrix& matrix) {
    if (matrix.empty()) {
        throw InputError("rank: empty matrix");
    }
    auto m = detail::integer_rows(matrix);
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = pivot_row;
        Integer best_abs = abs(m[pivot_row][col]);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            Integer a = abs(m[i][col]);
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        if (best_abs == 0) continue;
        if (best != pivot_row) std::swap(m[best], m[pivot_row]);

        const Integer pivot = m[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[pivot_row][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

// Basis of the right null space, one basis vector per column of the result.
// Columns of the input minus rank of the input many columns; a 0-column
// matrix when the kernel is trivial.
inline RationalMatrix kernel_basis(const RationalMatrix& matrix) {
    if (matrix.empty()) {
        throw InputError("kernel_basis: empty matrix");
    }
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    // Reduced row echelon form over Q.
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = matrix(i, j);

    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (m[i][col] != 0) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        std::swap(m[found], m[pivot_row]);
        const Rational pivot = m[pivot_row][col];
        for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[pivot_row][j];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    const std::size_t nullity = cols - pivot_cols.size();
    RationalMatrix basis(cols, nullity);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, k) = 1;
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            basis(pivot_cols[p], k) = -m[p][free_col];
        }
        ++k;
    }
    return basis;
}

// Diagnostic numerical rank: singular values above tol times the largest.
// Never used for verdicts.
inline std::size_t rank_float(const RationalMatrix& matrix, double tol) {
    if (matrix.empty()) {
        throw InputError("rank_float: empty matrix");
    }
    if (tol <= 0) {
        throw InputError("rank_float: tolerance must be positive");
    }
    Eigen::MatrixXd m(matrix.rows(), matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            const double v = matrix(i, j).convert_to<double>();
            if (!std::isfinite(v)) {
                throw NumericalRangeError("rank_float: entry exceeds floating-point range");
            }
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * sv(0)) ++r;
    }
    return r;
}

// M * v for a kernel-annihilation check; v given as column k of vecs.
inline bool annihilates(const RationalMatrix& m, const RationalMatrix& vecs, std::size_t k) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * vecs(j, k);
        if (acc != 0) return false;
    }
    return true;
}

} // namespace waring

#endif
