#pragma once

#include "homtensor/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homtensor {

/// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Column-stacks the given vectors (all of equal length).
    static Matrix from_columns(std::size_t ambient, const std::vector<Vec>& cols);
    static Matrix diagonal(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Matrix-vector product (v interpreted as a column).
    Vec apply(const Vec& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rat& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

/// Exact power m^k (k >= 0); m must be square.
Matrix matrix_power(const Matrix& m, std::size_t k);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

} // namespace homtensor
