#pragma once

#include "homtensor/check_report.hpp"
#include "homtensor/indexing.hpp"
#include "homtensor/matrix.hpp"
#include "homtensor/tensor.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <vector>

namespace homtensor {

/// 3-Hom-Lie algebra given by structure constants. The ternary bracket is
/// stored only on strictly increasing basis triples; every other evaluation
/// is derived by permutation sign (zero on repeated indices), so
/// skew-symmetry holds by construction.
class ThreeHomLieAlgebra {
public:
    ThreeHomLieAlgebra(std::size_t dim, Tensor bracket, Matrix alpha);

    /// Builds the bracket tensor from a sparse map {(i<j<k) -> value vector}.
    static ThreeHomLieAlgebra from_entries(
        std::size_t dim,
        const std::map<std::array<std::size_t, 3>, Vec>& entries,
        Matrix alpha);

    static ThreeHomLieAlgebra abelian(std::size_t dim, Matrix alpha);

    std::size_t dim() const { return dim_; }
    const Tensor& bracket_constants() const { return bracket_; }
    const Matrix& alpha() const { return alpha_; }

    /// [e_i, e_j, e_k] for arbitrary basis indices (sign-extended).
    Vec bracket_basis(std::size_t i, std::size_t j, std::size_t k) const;

    /// Trilinear evaluation on arbitrary coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

    /// Matrix of z -> [x, y, z].
    Matrix ad(const Vec& x, const Vec& y) const;

private:
    std::size_t dim_;
    Tensor bracket_; // shape {triple_count(dim), dim}
    Matrix alpha_;
};

/// Hom-Leibniz algebra: binary bracket with no symmetry assumed.
struct HomLeibnizAlgebra {
    std::size_t dim = 0;
    Tensor bracket2; // shape {dim, dim, dim}
    Matrix twist;

    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
};

/// 3-Hom-Leibniz algebra: ternary bracket with no symmetry assumed.
struct ThreeHomLeibnizAlgebra {
    std::size_t dim = 0;
    Tensor bracket3; // shape {dim, dim, dim, dim}
    Matrix twist;

    Vec bracket_basis(std::size_t i, std::size_t j, std::size_t k) const;
    Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;
};

/// Reinterpretation with the skew constants expanded to a full tensor.
ThreeHomLeibnizAlgebra as_leibniz(const ThreeHomLieAlgebra& algebra);

/// Verifies storage consistency, multiplicativity of the twist, and the
/// Hom-Filippov-Jacobi identity over all basis 5-tuples.
CheckReport check_3hl(const ThreeHomLieAlgebra& algebra);

/// Verifies psi . alpha = alpha' . psi and psi([x,y,z]) = [psi x, psi y, psi z]'.
CheckReport check_3hl_hom(const Matrix& psi, const ThreeHomLieAlgebra& src,
                          const ThreeHomLieAlgebra& dst);

/// Hom-Leibniz bracket on the fundamental objects (wedge square), basis
/// {e_i /\ e_j : i < j} in lexicographic order:
///   [X, Y]' = [x1,x2,y1] /\ a(y2) + a(y1) /\ [x1,x2,y2],  twist = wedge of a.
/// Requires the input to pass check_3hl.
HomLeibnizAlgebra fundamental_bracket(const ThreeHomLieAlgebra& algebra);

/// Verifies twist multiplicativity and the Hom-Leibniz identity
/// [a(x),[y,z]] = [[x,y],a(z)] + [a(y),[x,z]] on all basis triples.
/// With include_printed_variant, the variant ending in [a(y),[x,y]] is also
/// evaluated and reported informationally (never affecting the verdict).
CheckReport check_hom_leibniz(const HomLeibnizAlgebra& algebra,
                              bool include_printed_variant = false);

/// Verifies twist multiplicativity and the twisted ternary Leibniz identity
/// on all basis 5-tuples.
CheckReport check_3h_leibniz(const ThreeHomLeibnizAlgebra& algebra);

/// Verifies psi . twist_src = twist_dst . psi and bracket compatibility on
/// all basis triples.
CheckReport check_3h_leibniz_hom(const Matrix& psi, const ThreeHomLeibnizAlgebra& src,
                                 const ThreeHomLeibnizAlgebra& dst);

} // namespace homtensor
