#include "homtensor/linalg.hpp"

#include "homtensor/errors.hpp"

#include <algorithm>
#include <map>

namespace homtensor {

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pivot_row, c));
        Rat inv_pivot = Rat(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv_pivot;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col) == 0) continue;
            Rat factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

SubspaceBasis kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    SubspaceBasis basis;
    basis.ambient_dim = m.cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

SubspaceBasis image_basis(const Matrix& m) {
    auto pivots = rref(m).second;
    SubspaceBasis basis;
    basis.ambient_dim = m.rows();
    for (auto p : pivots) basis.vectors.push_back(m.column(p));
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, m.cols());
    return x;
}

std::optional<Vec> membership(const Vec& v, const SubspaceBasis& s) {
    if (v.size() != s.ambient_dim) throw DimensionError("membership: ambient dimension mismatch");
    return solve(Matrix::from_columns(s.ambient_dim, s.vectors), v);
}

std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
    if (z.ambient_dim != b.ambient_dim)
        throw DimensionError("quotient_dim: ambient dimension mismatch");
    for (const auto& v : b.vectors) {
        if (!membership(v, z))
            throw InternalError("quotient_dim: subspace is not contained in the numerator");
    }
    return z.dim() - b.dim();
}

Vec SolvedKernel::basis_vector(std::size_t k) const {
    Vec v = zero_vec(ambient_dim);
    v[free_cols[k]] = 1;
    for (const auto& [col, val] : pivot_parts[k]) v[col] = val;
    return v;
}

SubspaceBasis SolvedKernel::to_basis() const {
    SubspaceBasis basis;
    basis.ambient_dim = ambient_dim;
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        basis.vectors.push_back(basis_vector(k));
    return basis;
}

Vec SolvedKernel::coords_of(const Vec& v) const {
    if (v.size() != ambient_dim) throw DimensionError("coords_of: ambient dimension mismatch");
    Vec c(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) c[k] = v[free_cols[k]];
    return c;
}

Vec SolvedKernel::reconstruct(const Vec& coords) const {
    if (coords.size() != free_cols.size())
        throw DimensionError("reconstruct: coordinate length mismatch");
    Vec v = zero_vec(ambient_dim);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        if (coords[k] == 0) continue;
        v[free_cols[k]] += coords[k];
        for (const auto& [col, val] : pivot_parts[k]) v[col] += coords[k] * val;
    }
    return v;
}

SolvedKernel sparse_kernel(std::size_t n_cols, const std::vector<SparseRow>& rows) {
    // Incremental Gauss-Jordan: pivot column -> fully reduced unit row.
    std::map<std::size_t, SparseRow> pivot_rows;
    auto reduce = [&](SparseRow row) -> SparseRow {
        // Repeatedly eliminate the leading entry against known pivots.
        std::map<std::size_t, Rat> acc(row.begin(), row.end());
        for (auto it = acc.begin(); it != acc.end();) {
            if (it->second == 0) { it = acc.erase(it); continue; }
            auto piv = pivot_rows.find(it->first);
            if (piv == pivot_rows.end()) { ++it; continue; }
            Rat factor = it->second;
            for (const auto& [c, v] : piv->second) acc[c] -= factor * v;
            it = acc.begin();
        }
        SparseRow out;
        for (const auto& [c, v] : acc)
            if (v != 0) out.emplace_back(c, v);
        return out;
    };
    for (const auto& raw : rows) {
        SparseRow row = reduce(raw);
        if (row.empty()) continue;
        std::size_t lead = row.front().first;
        Rat inv = Rat(1) / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        // Back-eliminate the new pivot from existing rows.
        for (auto& [pcol, prow] : pivot_rows) {
            auto hit = std::lower_bound(prow.begin(), prow.end(), lead,
                                        [](const auto& e, std::size_t c) { return e.first < c; });
            if (hit == prow.end() || hit->first != lead) continue;
            Rat factor = hit->second;
            std::map<std::size_t, Rat> acc(prow.begin(), prow.end());
            for (const auto& [c, v] : row) acc[c] -= factor * v;
            prow.clear();
            for (const auto& [c, v] : acc)
                if (v != 0) prow.emplace_back(c, v);
        }
        pivot_rows.emplace(lead, std::move(row));
    }
    SolvedKernel kernel;
    kernel.ambient_dim = n_cols;
    std::vector<bool> is_pivot(n_cols, false);
    for (const auto& [pcol, prow] : pivot_rows) is_pivot[pcol] = true;
    for (std::size_t col = 0; col < n_cols; ++col) {
        if (is_pivot[col]) continue;
        kernel.free_cols.push_back(col);
        SparseRow part;
        for (const auto& [pcol, prow] : pivot_rows) {
            auto hit = std::lower_bound(prow.begin(), prow.end(), col,
                                        [](const auto& e, std::size_t c) { return e.first < c; });
            if (hit != prow.end() && hit->first == col && hit->second != 0)
                part.emplace_back(pcol, -hit->second);
        }
        kernel.pivot_parts.push_back(std::move(part));
    }
    return kernel;
}

} // namespace homtensor
