#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "eqcohom/errors.hpp"
#include "eqcohom/rational.hpp"

namespace eqcohom {

// Dense matrix over the rationals, row-major.  All arithmetic is exact.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    // Row-by-row literal, mostly for tests and built-in examples.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionMismatch("ragged rows in matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) {
        return Matrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ &&
               data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator+(const Matrix& other) const {
        require_same_shape(other, "matrix addition");
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] = data_[k] + other.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        require_same_shape(other, "matrix subtraction");
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] = data_[k] - other.data_[k];
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) {
            throw DimensionMismatch("matrix product: inner dimensions differ");
        }
        Matrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
        return out;
    }

    Matrix operator*(const Rational& scalar) const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            out.data_[k] = data_[k] * scalar;
        return out;
    }

    // Column j as an n x 1 matrix.
    Matrix column(std::size_t j) const {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const Matrix& col) {
        if (col.rows() != rows_ || col.cols() != 1) {
            throw DimensionMismatch("set_column: wrong column shape");
        }
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = col(i, 0);
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

  private:
    void require_same_shape(const Matrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionMismatch(std::string(op) + ": shapes differ");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

inline Matrix operator*(const Rational& scalar, const Matrix& m) {
    return m * scalar;
}

// Square block-diagonal assembly; blocks may be rectangular.
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

// Horizontal concatenation [a | b].
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("hconcat: row counts differ");
    }
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

}  // namespace eqcohom
