#pragma once

#include "homtensor/embedding.hpp"
#include "homtensor/linalg.hpp"
#include "homtensor/representation.hpp"
#include "homtensor/tensor.hpp"

#include <cstddef>
#include <optional>

namespace homtensor {

/// Default bound on the number of coefficients a cochain space may have
/// before operations refuse with CapacityError.
inline constexpr std::size_t kDefaultCapacity = 20000;

/// Multilinear map f : (/\^2 A)^(degree-1) (x) A -> W by coefficients.
/// Layout is lexicographic over (pair-slot ranks..., last algebra index,
/// output index), so coefficient vectors are reproducible bit-exactly.
struct Cochain {
    std::size_t degree = 1;
    std::size_t alg_dim = 0;
    std::size_t carrier_dim = 0;
    Tensor coeffs;

    static Cochain zero(std::size_t degree, std::size_t alg_dim, std::size_t carrier_dim);
    /// Degree-1 cochain from the matrix of a linear map A -> W.
    static Cochain from_matrix(const Matrix& m);

    static std::vector<std::size_t> coeff_shape(std::size_t degree, std::size_t alg_dim,
                                                std::size_t carrier_dim);

    /// Value on basis arguments: pair-slot ranks and a final algebra index.
    Vec value(const std::vector<std::size_t>& pair_slots, std::size_t last) const;

    /// Multilinear evaluation: each pair slot takes wedge coordinates, the
    /// final slot an algebra coordinate vector.
    Vec eval(const std::vector<Vec>& pair_args, const Vec& last) const;

    /// Degree-1 cochains are matrices; throws on other degrees.
    Matrix as_matrix() const;

    /// Flattened coefficient vector.
    Vec flat() const;
};

/// Solution space of the equivariance constraint
///   carrier_twist . f = f . (wedge(alg_twist)^(x)(n-1) (x) alg_twist)
/// inside the full coefficient space, kept in solved (sparse kernel) form.
struct CochainSpace {
    std::size_t degree = 1;
    std::size_t alg_dim = 0;
    std::size_t carrier_dim = 0;
    SolvedKernel kernel;

    std::size_t dim() const { return kernel.dim(); }
    /// Coordinates of an equivariant cochain in this basis; throws
    /// InvariantViolation when the cochain is not in the space.
    Vec coords(const Cochain& f) const;
    Cochain cochain_from_coords(const Vec& coords) const;
};

/// Equivariant cochain space for arbitrary twists (the abstract complex).
CochainSpace cochain_space_for(std::size_t degree, std::size_t alg_dim, const Matrix& alg_twist,
                               std::size_t carrier_dim, const Matrix& carrier_twist,
                               std::size_t capacity = kDefaultCapacity);

/// Cochain space of an embedding tensor: algebra (V, beta), carrier (L, alpha).
CochainSpace cochain_space(const EmbeddingTensor& et, std::size_t degree,
                           std::size_t capacity = kDefaultCapacity);

/// Dense basis of the cochain space (for inspection and small spaces).
SubspaceBasis cochain_space_basis(const EmbeddingTensor& et, std::size_t degree,
                                  std::size_t capacity = kDefaultCapacity);

/// The coboundary of the 3-Hom-Leibniz complex of algebra A with
/// coefficients in R, applied to an equivariant n-cochain (n >= 1).
/// Preconditions (valid R, equivariant f) are the caller's obligation.
Cochain general_coboundary(const ThreeHomLeibnizAlgebra& algebra,
                           const LeibnizRepresentation& rep, const Cochain& f);

/// The explicit six-term degree-1 coboundary of an embedding tensor,
/// computed directly from the structure data (kept independent of
/// general_coboundary; the two are compared in tests):
///   (d g)(u,v,w) = -g(rho(Tu,Tv)w) + [Tu,Tv,g(w)] + [Tu,g(v),Tw]
///                  - T rho(Tu,g(v)) w + [g(u),Tv,Tw] - T rho(g(u),Tv) w.
Cochain coboundary_degree1(const EmbeddingTensor& et, const Matrix& g);

/// Matrix of the degree-n coboundary from degree-n to degree-(n+1)
/// cochain-space coordinates; column j is the image of basis cochain j.
/// Throws InternalError if an image fails to be equivariant.
Matrix coboundary_matrix(const EmbeddingTensor& et, std::size_t degree,
                         std::size_t capacity = kDefaultCapacity);

/// The degree-0 coboundary image of an alpha-fixed pair (a, b):
///   wp(a,b) v = T rho(a,b) beta^{-1}(v) - [a, b, T beta^{-1}(v)].
/// Requires invertible twists and alpha-fixed arguments.
Cochain wp(const EmbeddingTensor& et, const Vec& a, const Vec& b);

/// Basis of Fix(alpha), the source of degree-0 cochain pairs.
SubspaceBasis zero_cochain_space(const EmbeddingTensor& et);

struct CohomologySummary {
    std::size_t degree = 0;
    std::size_t dim_cochain = 0;
    std::size_t dim_cocycle = 0;
    std::size_t dim_coboundary = 0;
    std::size_t dim_h = 0;
    /// Set when the degree-1 coboundary space was reported as zero because a
    /// twist is not invertible (wp undefined).
    bool non_regular = false;

    friend bool operator==(const CohomologySummary&, const CohomologySummary&) = default;
};

/// Exact cohomology dimensions in degree n >= 1. The degree-1 coboundary
/// space is the span of wp over basis pairs of Fix(alpha); for n >= 2 it is
/// the image of the previous coboundary matrix. Verifies B inside Z.
CohomologySummary cohomology(const EmbeddingTensor& et, std::size_t degree,
                             std::size_t capacity = kDefaultCapacity);

/// Whether two degree-1 cocycles differ by an element of the degree-1
/// coboundary space. Inputs are checked to be cocycles.
bool same_class(const EmbeddingTensor& et, const Matrix& f, const Matrix& g,
                std::size_t capacity = kDefaultCapacity);

} // namespace homtensor
