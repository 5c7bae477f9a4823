#include "homtensor/indexing.hpp"

#include "homtensor/errors.hpp"

namespace homtensor {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim) {
    if (!(i < j && j < dim)) throw DimensionError("pair_index requires i < j < dim");
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_unrank(std::size_t rank, std::size_t dim) {
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        std::size_t block = dim - i - 1;
        if (rank < block) return {i, i + 1 + rank};
        rank -= block;
    }
    throw DimensionError("pair rank out of range");
}

std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t dim) {
    if (!(i < j && j < k && k < dim)) throw DimensionError("triple_index requires i < j < k < dim");
    std::size_t rank = 0;
    for (std::size_t a = 0; a < i; ++a) rank += pair_count(dim - a - 1);
    rank += pair_index(j - i - 1, k - i - 1, dim - i - 1);
    return rank;
}

std::array<std::size_t, 3> triple_unrank(std::size_t rank, std::size_t dim) {
    for (std::size_t i = 0; i + 2 < dim; ++i) {
        std::size_t block = pair_count(dim - i - 1);
        if (rank < block) {
            auto [j, k] = pair_unrank(rank, dim - i - 1);
            return {i, i + 1 + j, i + 1 + k};
        }
        rank -= block;
    }
    throw DimensionError("triple rank out of range");
}

int sort_triple(std::size_t& i, std::size_t& j, std::size_t& k) {
    if (i == j || j == k || i == k) return 0;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    return sign;
}

Vec wedge_coords(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw DimensionError("wedge of vectors of different lengths");
    const std::size_t d = u.size();
    Vec out(pair_count(d), Rat(0));
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            out[pair_index(i, j, d)] = u[i] * v[j] - u[j] * v[i];
    return out;
}

Matrix wedge_square(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("wedge_square requires a square matrix");
    const std::size_t d = m.rows();
    const std::size_t p = pair_count(d);
    Matrix out(p, p);
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec w = wedge_coords(m.column(i), m.column(j));
            std::size_t c = pair_index(i, j, d);
            for (std::size_t r = 0; r < p; ++r) out.at(r, c) = w[r];
        }
    return out;
}

} // namespace homtensor
