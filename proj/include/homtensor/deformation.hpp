#pragma once

#include "homtensor/check_report.hpp"
#include "homtensor/cohomology.hpp"
#include "homtensor/embedding.hpp"

#include <cstddef>
#include <optional>

namespace homtensor {

/// Candidate equivalence witness: a pair of alpha-fixed algebra vectors.
struct EquivalenceWitness {
    Vec a;
    Vec b;
};

/// Verifies that inf generates a linear deformation of the base tensor:
/// the twist-intertwining law for inf and the three t-degree coefficient
/// equations of the deformed averaging identity on all basis triples of V.
CheckReport check_linear_deformation(const EmbeddingTensor& base, const Matrix& inf);

/// Whether the degree-1 coboundary of inf vanishes, evaluated by the
/// explicit formula. Requires inf to satisfy the twist-intertwining law
/// (throws InvariantViolation otherwise: not a 1-cochain).
bool infinitesimal_is_cocycle(const EmbeddingTensor& base, const Matrix& inf);

/// Verifies the three conditions making
///   (Id + t alpha^{-1} ad(a,b), Id + t beta^{-1} rho(a,b))
/// a homomorphism from base + t inf2 to base + t inf1, coefficient by
/// coefficient in the formal parameter t. Requires both infinitesimals to be
/// valid linear deformations, invertible twists, and an alpha-fixed witness.
CheckReport check_equivalence_witness(const EmbeddingTensor& base, const Matrix& inf1,
                                      const Matrix& inf2, const EquivalenceWitness& w);

/// Whether inf2 - inf1 lies in the degree-1 coboundary space. Requires both
/// to be valid linear deformations of the base.
bool deformations_same_class(const EmbeddingTensor& base, const Matrix& inf1,
                             const Matrix& inf2);

/// Heuristic exhaustive search for a passing witness over integer
/// coordinates (in the Fix(alpha) basis) within [-bound, bound],
/// lexicographic order, first hit returned.
std::optional<EquivalenceWitness> search_equivalence_witness(const EmbeddingTensor& base,
                                                             const Matrix& inf1,
                                                             const Matrix& inf2, long bound);

} // namespace homtensor
