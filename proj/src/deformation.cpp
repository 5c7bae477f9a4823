#include "homtensor/deformation.hpp"

#include "homtensor/errors.hpp"
#include "homtensor/linalg.hpp"

namespace homtensor {

CheckReport check_linear_deformation(const EmbeddingTensor& base, const Matrix& inf) {
    const std::size_t d = base.dim_l();
    const std::size_t v = base.dim_v();
    if (inf.rows() != d || inf.cols() != v)
        throw DimensionError("infinitesimal must have the shape of the base tensor");
    const Representation& rep = base.rep();
    const ThreeHomLieAlgebra& alg = base.algebra();
    const Matrix& t = base.t();
    CheckReport report;

    Matrix lhs_twist = inf * rep.beta;
    Matrix rhs_twist = alg.alpha() * inf;
    for (std::size_t c = 0; c < v; ++c)
        if (lhs_twist.column(c) != rhs_twist.column(c))
            report.fail("deformation-twist-intertwining", {c}, lhs_twist.column(c),
                        rhs_twist.column(c));

    for (std::size_t iu = 0; iu < v; ++iu) {
        Vec tu = t.column(iu), ju = inf.column(iu);
        for (std::size_t iv = 0; iv < v; ++iv) {
            Vec tv = t.column(iv), jv = inf.column(iv);
            Matrix rho_tt = rep.rho_vec(tu, tv);
            Matrix rho_tj = rep.rho_vec(tu, jv);
            Matrix rho_jt = rep.rho_vec(ju, tv);
            Matrix rho_jj = rep.rho_vec(ju, jv);
            for (std::size_t iw = 0; iw < v; ++iw) {
                Vec tw = t.column(iw), jw = inf.column(iw);

                // t^1 coefficient of the deformed averaging identity
                Vec lhs1 = alg.bracket(tu, tv, jw);
                add_scaled(lhs1, 1, alg.bracket(tu, jv, tw));
                add_scaled(lhs1, 1, alg.bracket(ju, tv, tw));
                Vec rhs1 = inf.apply(rho_tt.column(iw));
                add_scaled(rhs1, 1, t.apply(rho_tj.column(iw)));
                add_scaled(rhs1, 1, t.apply(rho_jt.column(iw)));
                if (lhs1 != rhs1)
                    report.fail("deformation-linear-term", {iu, iv, iw}, lhs1, rhs1);

                // t^2 coefficient
                Vec lhs2 = alg.bracket(tu, jv, jw);
                add_scaled(lhs2, 1, alg.bracket(ju, tv, jw));
                add_scaled(lhs2, 1, alg.bracket(ju, jv, tw));
                Vec rhs2 = inf.apply(rho_tj.column(iw));
                add_scaled(rhs2, 1, inf.apply(rho_jt.column(iw)));
                add_scaled(rhs2, 1, t.apply(rho_jj.column(iw)));
                if (lhs2 != rhs2)
                    report.fail("deformation-quadratic-term", {iu, iv, iw}, lhs2, rhs2);

                // t^3 coefficient: inf is itself an embedding tensor
                Vec lhs3 = alg.bracket(ju, jv, jw);
                Vec rhs3 = inf.apply(rho_jj.column(iw));
                if (lhs3 != rhs3)
                    report.fail("deformation-cubic-term", {iu, iv, iw}, lhs3, rhs3);
            }
        }
    }
    return report;
}

bool infinitesimal_is_cocycle(const EmbeddingTensor& base, const Matrix& inf) {
    const std::size_t d = base.dim_l();
    const std::size_t v = base.dim_v();
    if (inf.rows() != d || inf.cols() != v)
        throw DimensionError("infinitesimal must have the shape of the base tensor");
    if (!(inf * base.rep().beta == base.algebra().alpha() * inf))
        throw InvariantViolation(
            "infinitesimal is not a 1-cochain: twist intertwining fails");
    return coboundary_degree1(base, inf).coeffs.is_zero();
}

CheckReport check_equivalence_witness(const EmbeddingTensor& base, const Matrix& inf1,
                                      const Matrix& inf2, const EquivalenceWitness& w) {
    const std::size_t d = base.dim_l();
    const std::size_t v = base.dim_v();
    const ThreeHomLieAlgebra& alg = base.algebra();
    const Representation& rep = base.rep();
    if (w.a.size() != d || w.b.size() != d)
        throw DimensionError("witness vectors must live in the algebra");
    if (alg.alpha().apply(w.a) != w.a || alg.alpha().apply(w.b) != w.b)
        throw InvariantViolation("witness vectors must be fixed by alpha");
    if (!check_linear_deformation(base, inf1).passed() ||
        !check_linear_deformation(base, inf2).passed())
        throw PreconditionError(
            "witness check requires two valid linear deformations of the base");
    auto alpha_inv = inverse(alg.alpha());
    if (!alpha_inv) throw RegularityError("witness check requires an invertible twist alpha");
    auto beta_inv = inverse(rep.beta);
    if (!beta_inv) throw RegularityError("witness check requires an invertible twist beta");

    CheckReport report;
    Matrix psi = *alpha_inv * alg.ad(w.a, w.b);       // t-linear part on L
    Matrix chi = *beta_inv * rep.rho_vec(w.a, w.b);   // t-linear part on V

    // Condition (1): Id + t psi is an algebra homomorphism for all t.
    {
        Matrix lhs = psi * alg.alpha();
        Matrix rhs = alg.alpha() * psi;
        for (std::size_t c = 0; c < d; ++c)
            if (lhs.column(c) != rhs.column(c))
                report.fail("homomorphism-twist-t1", {c}, lhs.column(c), rhs.column(c));
    }
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei = unit_vec(d, i), pi = psi.column(i);
        for (std::size_t j = 0; j < d; ++j) {
            Vec ej = unit_vec(d, j), pj = psi.column(j);
            for (std::size_t k = 0; k < d; ++k) {
                Vec ek = unit_vec(d, k), pk = psi.column(k);

                Vec lhs1 = psi.apply(alg.bracket_basis(i, j, k));
                Vec rhs1 = alg.bracket(pi, ej, ek);
                add_scaled(rhs1, 1, alg.bracket(ei, pj, ek));
                add_scaled(rhs1, 1, alg.bracket(ei, ej, pk));
                if (lhs1 != rhs1)
                    report.fail("homomorphism-bracket-t1", {i, j, k}, lhs1, rhs1);

                Vec lhs2 = alg.bracket(pi, pj, ek);
                add_scaled(lhs2, 1, alg.bracket(pi, ej, pk));
                add_scaled(lhs2, 1, alg.bracket(ei, pj, pk));
                if (!is_zero(lhs2))
                    report.fail("homomorphism-bracket-t2", {i, j, k}, lhs2, zero_vec(d));

                Vec lhs3 = alg.bracket(pi, pj, pk);
                if (!is_zero(lhs3))
                    report.fail("homomorphism-bracket-t3", {i, j, k}, lhs3, zero_vec(d));
            }
        }
    }

    // Condition (2): (T + t inf1)(u + t chi u) = (Id + t psi)(T u + t inf2 u).
    {
        const Matrix& t = base.t();
        Matrix lhs1 = inf1 + t * chi;
        Matrix rhs1 = inf2 + psi * t;
        for (std::size_t c = 0; c < v; ++c)
            if (lhs1.column(c) != rhs1.column(c))
                report.fail("intertwining-t1", {c}, lhs1.column(c), rhs1.column(c));
        Matrix lhs2 = inf1 * chi;
        Matrix rhs2 = psi * inf2;
        for (std::size_t c = 0; c < v; ++c)
            if (lhs2.column(c) != rhs2.column(c))
                report.fail("intertwining-t2", {c}, lhs2.column(c), rhs2.column(c));
    }

    // Condition (3): the pair action intertwines for all t.
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei = unit_vec(d, i), pi = psi.column(i);
        for (std::size_t j = 0; j < d; ++j) {
            Vec ej = unit_vec(d, j), pj = psi.column(j);
            Matrix rho_ij = rep.rho_basis(i, j);
            Matrix first_order = rep.rho_vec(pi, ej) + rep.rho_vec(ei, pj);
            Matrix lhs1 = chi * rho_ij;
            Matrix rhs1 = first_order + rho_ij * chi;
            Matrix lhs2 = rep.rho_vec(pi, pj) + first_order * chi;
            Matrix lhs3 = rep.rho_vec(pi, pj) * chi;
            for (std::size_t u = 0; u < v; ++u) {
                if (lhs1.column(u) != rhs1.column(u))
                    report.fail("action-intertwining-t1", {i, j, u}, lhs1.column(u),
                                rhs1.column(u));
                if (!is_zero(lhs2.column(u)))
                    report.fail("action-intertwining-t2", {i, j, u}, lhs2.column(u),
                                zero_vec(v));
                if (!is_zero(lhs3.column(u)))
                    report.fail("action-intertwining-t3", {i, j, u}, lhs3.column(u),
                                zero_vec(v));
            }
        }
    }
    return report;
}

bool deformations_same_class(const EmbeddingTensor& base, const Matrix& inf1,
                             const Matrix& inf2) {
    if (!check_linear_deformation(base, inf1).passed() ||
        !check_linear_deformation(base, inf2).passed())
        throw PreconditionError(
            "class comparison requires two valid linear deformations of the base");
    return same_class(base, inf2, inf1);
}

std::optional<EquivalenceWitness> search_equivalence_witness(const EmbeddingTensor& base,
                                                             const Matrix& inf1,
                                                             const Matrix& inf2, long bound) {
    if (bound < 0) throw PreconditionError("witness search bound must be non-negative");
    SubspaceBasis fix = kernel_basis(base.algebra().alpha() -
                                     Matrix::identity(base.dim_l()));
    const std::size_t k = fix.dim();
    const std::size_t d = base.dim_l();
    const Matrix& t = base.t();

    auto alpha_inv = inverse(base.algebra().alpha());
    auto beta_inv = inverse(base.rep().beta);
    if (!alpha_inv || !beta_inv)
        throw RegularityError("witness search requires invertible twists");

    // Quick reject for a candidate pair via the t^1 intertwining relation,
    // before the full coefficient check.
    auto quick_match = [&](const Vec& a, const Vec& b) {
        Matrix lhs = inf1 + t * (*beta_inv * base.rep().rho_vec(a, b));
        Matrix rhs = inf2 + (*alpha_inv * base.algebra().ad(a, b)) * t;
        return lhs == rhs;
    };

    std::vector<long> coords(2 * k, -bound);
    if (k == 0) coords.clear();
    while (true) {
        Vec a = zero_vec(d), b = zero_vec(d);
        for (std::size_t i = 0; i < k; ++i) {
            add_scaled(a, Rat(coords[i]), fix.vectors[i]);
            add_scaled(b, Rat(coords[k + i]), fix.vectors[i]);
        }
        if (quick_match(a, b)) {
            EquivalenceWitness w{a, b};
            if (check_equivalence_witness(base, inf1, inf2, w).passed()) return w;
        }
        // Advance lexicographically; the all-(-bound) start and first-found
        // order make the search deterministic.
        std::size_t pos = coords.size();
        bool done = coords.empty();
        while (pos > 0) {
            --pos;
            if (++coords[pos] <= bound) break;
            coords[pos] = -bound;
            if (pos == 0) done = true;
        }
        if (done) return std::nullopt;
    }
}

} // namespace homtensor
