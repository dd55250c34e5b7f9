#pragma once

#include <cstddef>
#include <vector>

#include "twinrep/error.hpp"
#include "twinrep/ratfunc.hpp"

namespace twinrep {

/// Dense square-friendly matrix with value semantics. T is an exact field
/// element type (RatFunc or Rational).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) {
            throw Error(ErrorKind::DegreeMismatch, "matrix product shape mismatch");
        }
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) {
                    continue;
                }
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out.at(i, j) += a * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] += rhs.data_[i];
        }
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] -= rhs.data_[i];
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out.at(j, i) = at(i, j);
            }
        }
        return out;
    }

    bool is_identity() const {
        if (rows_ != cols_) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (at(i, j) != (i == j ? T(1) : T(0))) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    void require_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw Error(ErrorKind::DegreeMismatch, "matrix shape mismatch");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using RfMatrix = Matrix<RatFunc>;
using QMatrix = Matrix<Rational>;

/// Determinant by Gaussian elimination over the entry field.
template <typename T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::DegreeMismatch, "determinant of non-square matrix");
    }
    std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == T(0)) {
            ++pivot;
        }
        if (pivot == n) {
            return T(0);
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
            }
            det = T(0) - det;
        }
        det = det * m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == T(0)) {
                continue;
            }
            T factor = m.at(r, col) / m.at(col, col);
            for (std::size_t j = col; j < n; ++j) {
                m.at(r, j) -= factor * m.at(col, j);
            }
        }
    }
    return det;
}

/// Entrywise exact evaluation at t0. Throws ZeroSpecialization/PoleAtPoint.
QMatrix specialize(const RfMatrix& m, const Rational& t0);

} // namespace twinrep
