#pragma once

#include <optional>
#include <vector>

#include "taftcat/cyclotomic_field.hpp"

namespace taftcat {

/**
 * Dense matrix over an exact field scalar. The scalar type needs value
 * semantics, a default constructor giving zero, +, -, *, inverse(),
 * is_zero() and ==. Row/column indices are zero-based; entries are stored
 * row-major.
 */
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n, const K& one) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i)
            r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i)
            r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = -data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::domain_error("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const K& bkj = b(k, j);
                    if (!bkj.is_zero())
                        r(i, j) = r(i, j) + aik * bkj;
                }
            }
        }
        return r;
    }

    friend Matrix operator*(const K& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        if (c.is_zero())
            return r;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!a.data_[i].is_zero())
                r.data_[i] = c * a.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::domain_error("Matrix: shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<K> data_;
};

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows())
        throw std::domain_error("hstack: row count mismatch");
    Matrix<K> r(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.cols())
        throw std::domain_error("vstack: column count mismatch");
    Matrix<K> r(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, j) = b(i, j);
    return r;
}

/**
 * In-place reduced row echelon form with deterministic first-nonzero
 * pivoting. Returns the pivot columns in order.
 */
template <class K>
std::vector<size_t> rref(Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (size_t j = col; j < m.cols(); ++j)
                std::swap(m(row, j), m(pr, j));
        K inv = m(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) = inv * m(row, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            K factor = m(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
size_t rank(Matrix<K> m) {
    return rref(m).size();
}

/**
 * Columns spanning the null space {x : m x = 0}, one column per free
 * variable of the reduced system.
 */
template <class K>
Matrix<K> kernel_basis(Matrix<K> m, const K& one) {
    size_t cols = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots)
        is_pivot[p] = true;
    size_t free_count = cols - pivots.size();
    Matrix<K> basis(cols, free_count);
    size_t out = 0;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        basis(fc, out) = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis(pivots[pi], out) = -m(pi, fc);
        ++out;
    }
    return basis;
}

/**
 * Any solution X of A X = B, or nullopt when the system is inconsistent.
 * Free variables are set to zero, so the result is deterministic.
 */
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows())
        throw std::domain_error("solve: row count mismatch");
    Matrix<K> aug = hstack(a, b);
    std::vector<size_t> pivots = rref(aug);
    for (size_t p : pivots)
        if (p >= a.cols())
            return std::nullopt;
    Matrix<K> x(a.cols(), b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (size_t j = 0; j < b.cols(); ++j)
            x(pivots[pi], j) = aug(pi, a.cols() + j);
    return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a, const K& one) {
    if (a.rows() != a.cols())
        throw std::domain_error("inverse: matrix must be square");
    Matrix<K> aug = hstack(a, Matrix<K>::identity(a.rows(), one));
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != a.rows())
        throw std::domain_error("inverse: matrix is singular");
    Matrix<K> out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            out(i, j) = aug(i, a.cols() + j);
    return out;
}

// dim(colspace A + colspace B) computed on the stacked columns.
template <class K>
size_t sum_rank(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() == 0)
        return rank(b);
    if (b.cols() == 0)
        return rank(a);
    return rank(hstack(a, b));
}

// dim(colspace A intersect colspace B).
template <class K>
size_t intersection_dim(const Matrix<K>& a, const Matrix<K>& b) {
    size_t ra = rank(a), rb = rank(b);
    return ra + rb - sum_rank(a, b);
}

}  // namespace taftcat
