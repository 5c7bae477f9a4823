#pragma once

#include "homtensor/matrix.hpp"
#include "homtensor/rational.hpp"

#include <array>
#include <cstddef>
#include <utility>

namespace homtensor {

// Canonical enumeration of strictly increasing pairs and triples in
// lexicographic order; the induced basis of wedge powers is fixed
// project-wide by these ranks.

constexpr std::size_t pair_count(std::size_t dim) {
    return dim * (dim - 1) / 2;
}

constexpr std::size_t triple_count(std::size_t dim) {
    return dim < 3 ? 0 : dim * (dim - 1) * (dim - 2) / 6;
}

/// Rank of (i, j) with i < j among increasing pairs of {0..dim-1}.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim);

/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_unrank(std::size_t rank, std::size_t dim);

/// Rank of (i, j, k) with i < j < k among increasing triples of {0..dim-1}.
std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t dim);

/// Inverse of triple_index.
std::array<std::size_t, 3> triple_unrank(std::size_t rank, std::size_t dim);

/// Sorts three indices; returns the permutation sign (+1/-1), or 0 when
/// two indices coincide.
int sort_triple(std::size_t& i, std::size_t& j, std::size_t& k);

/// Wedge coordinates of u /\ v in the increasing-pair basis.
Vec wedge_coords(const Vec& u, const Vec& v);

/// Induced map on the wedge square: column (i<j) holds the coordinates of
/// (M e_i) /\ (M e_j).
Matrix wedge_square(const Matrix& m);

} // namespace homtensor
