#pragma once

#include "homtensor/algebra.hpp"
#include "homtensor/check_report.hpp"
#include "homtensor/matrix.hpp"
#include "homtensor/tensor.hpp"

#include <cstddef>

namespace homtensor {

/// Candidate representation of a 3-Hom-Lie algebra: a skew pair-action
/// rho : /\^2 L -> End(V) and a twist beta on V. rho is stored on increasing
/// basis pairs only and extended skew, matching the wedge basis convention.
/// Validity (Eqs. of the representation axioms) is established by
/// check_representation, not assumed.
struct Representation {
    ThreeHomLieAlgebra algebra;
    std::size_t vdim = 0;
    Tensor rho;  // shape {pair_count(dim L), vdim, vdim}
    Matrix beta; // vdim x vdim

    Representation(ThreeHomLieAlgebra algebra_, std::size_t vdim_, Tensor rho_, Matrix beta_);

    static Representation zero(ThreeHomLieAlgebra algebra, std::size_t vdim, Matrix beta);

    /// rho(e_i, e_j) for arbitrary basis indices (skew-extended).
    Matrix rho_basis(std::size_t i, std::size_t j) const;

    /// Bilinear skew extension to arbitrary algebra vectors.
    Matrix rho_vec(const Vec& x, const Vec& y) const;
};

/// Verifies the representation laws: twist equivariance of rho on basis
/// pairs and both quadratic pair-action identities on basis 4-tuples,
/// compared column-by-column on basis vectors of V.
/// The caller is responsible for the algebra itself being valid.
CheckReport check_representation(const Representation& rep);

/// V = L, beta = alpha, rho(x, y) = ad(x, y). Requires a valid algebra.
Representation adjoint_representation(const ThreeHomLieAlgebra& algebra);

/// n-fold direct sum of the adjoint action on V = L^n with the block twist.
Representation direct_sum_representation(const ThreeHomLieAlgebra& algebra, std::size_t n);

/// The ternary Leibniz bracket [x+u, y+v, z+w] = [x,y,z] + rho(x,y)(w) on
/// L (+) V (L coordinates first), twist alpha (+) beta. Deliberately callable
/// on non-representations: the output passes check_3h_leibniz exactly when
/// the candidate passes check_representation.
ThreeHomLeibnizAlgebra hemisemidirect_product(const Representation& rep);

/// Representation of a 3-Hom-Leibniz algebra: three trilinear actions with a
/// carrier twist. Actions are stored as unconstrained matrices per ordered
/// algebra-index pair:
///   l(e_i, e_j, u) = L_ij u,  m(e_i, u, e_j) = M_ij u,  r(u, e_i, e_j) = R_ij u.
struct LeibnizRepresentation {
    ThreeHomLeibnizAlgebra algebra;
    std::size_t wdim = 0;
    Tensor l_act, m_act, r_act; // each shape {dim, dim, wdim, wdim}
    Matrix beta;                // carrier twist, wdim x wdim

    LeibnizRepresentation(ThreeHomLeibnizAlgebra algebra_, std::size_t wdim_, Tensor l, Tensor m,
                          Tensor r, Matrix beta_);

    static LeibnizRepresentation zero(ThreeHomLeibnizAlgebra algebra, std::size_t wdim,
                                      Matrix beta);

    Matrix l_basis(std::size_t i, std::size_t j) const;
    Matrix m_basis(std::size_t i, std::size_t j) const;
    Matrix r_basis(std::size_t i, std::size_t j) const;

    /// Trilinear evaluations on coordinate vectors (algebra args x, z;
    /// carrier arg u).
    Vec l(const Vec& x, const Vec& y, const Vec& u) const;
    Vec m(const Vec& x, const Vec& u, const Vec& z) const;
    Vec r(const Vec& u, const Vec& y, const Vec& z) const;
};

/// Verifies the three twist-equivariance laws and the five action
/// compatibility identities over all basis tuples. The caller is
/// responsible for the underlying algebra being valid.
CheckReport check_leibniz_representation(const LeibnizRepresentation& rep);

} // namespace homtensor
