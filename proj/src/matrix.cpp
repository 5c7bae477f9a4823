#include "homtensor/matrix.hpp"

#include "homtensor/errors.hpp"
#include "homtensor/linalg.hpp"

namespace homtensor {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t ambient, const std::vector<Vec>& cols) {
    Matrix m(ambient, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != ambient)
            throw DimensionError("column length does not match ambient dimension");
        for (std::size_t r = 0; r < ambient; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec out(rows_, Rat(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
            }
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
}

Matrix operator*(const Rat& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) out.entries_[i] = c * m.entries_[i];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += " ";
            s += homtensor::to_string(at(r, c));
        }
    }
    s += "]";
    return s;
}

Matrix matrix_power(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw DimensionError("matrix power requires a square matrix");
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) out = out * m;
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto [rref_aug, pivots] = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rref_aug.at(r, n + c);
    return inv;
}

} // namespace homtensor
