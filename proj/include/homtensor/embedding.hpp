#pragma once

#include "homtensor/algebra.hpp"
#include "homtensor/check_report.hpp"
#include "homtensor/representation.hpp"

#include <cstddef>

namespace homtensor {

/// Verifies the embedding-tensor equations for t : V -> L against a
/// representation: the twist intertwining T beta = alpha T as a matrix
/// identity (reported per column) and [Tu, Tv, Tw] = T(rho(Tu,Tv) w) on all
/// basis triples of V. The representation is assumed valid (see
/// EmbeddingTensor::create for the checked construction).
CheckReport check_embedding_tensor(const Representation& rep, const Matrix& t);

/// Validated embedding tensor; construction re-checks the representation
/// and the tensor equations, so downstream consumers (induced structures,
/// cohomology, deformations) always hold a meaningful value.
class EmbeddingTensor {
public:
    static EmbeddingTensor create(Representation rep, Matrix t);

    const Representation& rep() const { return rep_; }
    const ThreeHomLieAlgebra& algebra() const { return rep_.algebra; }
    const Matrix& t() const { return t_; }
    std::size_t dim_l() const { return rep_.algebra.dim(); }
    std::size_t dim_v() const { return rep_.vdim; }

private:
    EmbeddingTensor(Representation rep, Matrix t) : rep_(std::move(rep)), t_(std::move(t)) {}
    Representation rep_;
    Matrix t_;
};

/// Independent graph criterion: spans {T e_u + e_u} inside the
/// hemisemidirect product and decides closure under the product bracket and
/// the product twist by direct membership computations. Never consults the
/// embedding-tensor equations.
bool graph_is_subalgebra(const Representation& rep, const Matrix& t);

/// The bracket [u,v,w]_T = rho(Tu,Tv) w on V with twist beta.
ThreeHomLeibnizAlgebra induced_leibniz(const EmbeddingTensor& et);

/// The representation of (V, [.,.,.]_T, beta) on carrier L with twist alpha:
///   l(u,v,x) = [Tu,Tv,x]
///   m(u,x,v) = [Tu,x,Tv] - T rho(Tu,x) v
///   r(x,u,v) = [x,Tu,Tv] - T rho(x,Tu) v
LeibnizRepresentation induced_representation(const EmbeddingTensor& et);

/// Morphism candidate between embedding tensors over a common representation.
struct EtMorphism {
    Matrix psi_l; // dim L x dim L
    Matrix psi_v; // vdim x vdim
};

/// Verifies the morphism laws from src (T') to dst (T): psi_l is an algebra
/// endomorphism, the twists commute with psi_v, T psi_v = psi_l T', and the
/// pair action intertwines.
CheckReport check_et_hom(const EtMorphism& m, const EmbeddingTensor& src,
                         const EmbeddingTensor& dst);

// Stock constructions. Each returns a candidate (representation, matrix)
// pair; the *_tensor helpers validate their parameters and the result.

/// Identity map on L with the adjoint representation.
EmbeddingTensor identity_tensor(const ThreeHomLieAlgebra& algebra);

/// A derivation d with d^2 = 0 and alpha d = d alpha, over the adjoint
/// representation. Throws InvariantViolation naming the violated condition.
EmbeddingTensor derivation_tensor(const ThreeHomLieAlgebra& algebra, const Matrix& d);

/// Sum map (x_1, ..., x_n) -> x_1 + ... + x_n over the n-fold direct sum.
EmbeddingTensor sum_tensor(const ThreeHomLieAlgebra& algebra, std::size_t n);

/// i-th projection (1-based i <= n) over the n-fold direct sum.
EmbeddingTensor projection_tensor(const ThreeHomLieAlgebra& algebra, std::size_t n,
                                  std::size_t i);

/// A map f : L -> L over the adjoint representation satisfying
/// alpha f = f beta and f(rho(x, f u) v) = [x, f u, f v]. The conditions are
/// checked as printed, then the embedding-tensor equations are confirmed
/// independently; a discrepancy raises InternalError rather than being
/// suppressed.
EmbeddingTensor custom_map_tensor(const ThreeHomLieAlgebra& algebra, const Matrix& f);

} // namespace homtensor
