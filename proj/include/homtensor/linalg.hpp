#pragma once

#include "homtensor/matrix.hpp"
#include "homtensor/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace homtensor {

/// List of linearly independent coordinate vectors in a common ambient space.
/// Producers guarantee independence; it is not re-verified on construction.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;

    std::size_t dim() const { return vectors.size(); }
};

/// Reduced row-echelon form with its pivot columns. Exact Gauss-Jordan
/// elimination, first nonzero pivot.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of { v : m v = 0 }. One basis vector per free column: unit entry at
/// the free column, pivot entries filled from the rref.
SubspaceBasis kernel_basis(const Matrix& m);

/// Basis of the column space: the pivot columns of m.
SubspaceBasis image_basis(const Matrix& m);

/// A particular solution of m x = b (free variables zero), or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Coordinates of v in the basis when v lies in its span, else nullopt.
std::optional<Vec> membership(const Vec& v, const SubspaceBasis& s);

/// dim z - dim b. Requires span(b) inside span(z); throws InternalError
/// otherwise (a coboundary escaping the cocycle space is a bug signal).
std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

/// One row of a sparse matrix: (column, value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Kernel of a sparse constraint matrix, kept in solved form: the kernel
/// basis vector for free column f has a unit entry at f plus the recorded
/// entries at pivot columns. Avoids materialising large mostly-empty spaces.
struct SolvedKernel {
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> free_cols;
    /// Per free column, the (pivot column, value) entries of its basis vector.
    std::vector<SparseRow> pivot_parts;

    std::size_t dim() const { return free_cols.size(); }
    Vec basis_vector(std::size_t k) const;
    SubspaceBasis to_basis() const;

    /// Coordinates of v in the kernel basis, assuming v lies in the kernel:
    /// the restriction of v to the free columns.
    Vec coords_of(const Vec& v) const;
    /// Rebuilds the ambient vector from kernel coordinates.
    Vec reconstruct(const Vec& coords) const;
};

/// Exact sparse Gauss-Jordan kernel computation for n_cols unknowns.
SolvedKernel sparse_kernel(std::size_t n_cols, const std::vector<SparseRow>& rows);

} // namespace homtensor
