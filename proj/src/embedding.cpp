#include "homtensor/embedding.hpp"

#include "homtensor/errors.hpp"
#include "homtensor/linalg.hpp"

namespace homtensor {

CheckReport check_embedding_tensor(const Representation& rep, const Matrix& t) {
    const std::size_t d = rep.algebra.dim();
    const std::size_t v = rep.vdim;
    if (t.rows() != d || t.cols() != v)
        throw DimensionError("embedding tensor matrix must map V coordinates to L coordinates");
    CheckReport report;

    Matrix lhs_twist = t * rep.beta;
    Matrix rhs_twist = rep.algebra.alpha() * t;
    for (std::size_t c = 0; c < v; ++c) {
        if (lhs_twist.column(c) != rhs_twist.column(c))
            report.fail("twist-intertwining", {c}, lhs_twist.column(c), rhs_twist.column(c));
    }

    for (std::size_t iu = 0; iu < v; ++iu) {
        Vec tu = t.column(iu);
        for (std::size_t iv = 0; iv < v; ++iv) {
            Vec tv = t.column(iv);
            Matrix rho_tutv = rep.rho_vec(tu, tv);
            for (std::size_t iw = 0; iw < v; ++iw) {
                Vec lhs = rep.algebra.bracket(tu, tv, t.column(iw));
                Vec rhs = t.apply(rho_tutv.column(iw));
                if (lhs != rhs) report.fail("averaging-identity", {iu, iv, iw}, lhs, rhs);
            }
        }
    }
    return report;
}

EmbeddingTensor EmbeddingTensor::create(Representation rep, Matrix t) {
    CheckReport rep_report = check_representation(rep);
    if (!rep_report.passed())
        throw PreconditionError("embedding tensor construction: representation laws fail ("
                                + rep_report.failures.front().law + ")");
    CheckReport report = check_embedding_tensor(rep, t);
    if (!report.passed())
        throw PreconditionError("embedding tensor construction: tensor equations fail ("
                                + report.failures.front().law + ")");
    return EmbeddingTensor(std::move(rep), std::move(t));
}

bool graph_is_subalgebra(const Representation& rep, const Matrix& t) {
    const std::size_t d = rep.algebra.dim();
    const std::size_t v = rep.vdim;
    if (t.rows() != d || t.cols() != v)
        throw DimensionError("graph candidate matrix must map V coordinates to L coordinates");
    ThreeHomLeibnizAlgebra product = hemisemidirect_product(rep);

    SubspaceBasis graph;
    graph.ambient_dim = d + v;
    for (std::size_t u = 0; u < v; ++u) {
        Vec g = zero_vec(d + v);
        for (std::size_t r = 0; r < d; ++r) g[r] = t.at(r, u);
        g[d + u] = 1;
        graph.vectors.push_back(std::move(g));
    }

    for (const auto& g : graph.vectors) {
        if (!membership(product.twist.apply(g), graph)) return false;
    }
    for (const auto& ga : graph.vectors)
        for (const auto& gb : graph.vectors)
            for (const auto& gc : graph.vectors) {
                if (!membership(product.bracket(ga, gb, gc), graph)) return false;
            }
    return true;
}

ThreeHomLeibnizAlgebra induced_leibniz(const EmbeddingTensor& et) {
    const std::size_t v = et.dim_v();
    const Representation& rep = et.rep();
    ThreeHomLeibnizAlgebra out;
    out.dim = v;
    out.twist = rep.beta;
    out.bracket3 = Tensor({v, v, v, v});
    for (std::size_t iu = 0; iu < v; ++iu)
        for (std::size_t iv = 0; iv < v; ++iv) {
            Matrix rho_tutv = rep.rho_vec(et.t().column(iu), et.t().column(iv));
            for (std::size_t iw = 0; iw < v; ++iw)
                for (std::size_t r = 0; r < v; ++r)
                    out.bracket3.at({iu, iv, iw, r}) = rho_tutv.at(r, iw);
        }
    return out;
}

LeibnizRepresentation induced_representation(const EmbeddingTensor& et) {
    const std::size_t d = et.dim_l();
    const std::size_t v = et.dim_v();
    const Representation& rep = et.rep();
    const Matrix& t = et.t();
    ThreeHomLeibnizAlgebra algebra = induced_leibniz(et);

    // Pair-indexed action layout over the algebra (V, [.,.,.]_T): the carrier
    // matrix for algebra pair (e_u, e_v) sits at {u, v, :, :}.
    Tensor l_act({v, v, d, d}), m_act({v, v, d, d}), r_act({v, v, d, d});
    for (std::size_t iu = 0; iu < v; ++iu) {
        Vec tu = t.column(iu);
        for (std::size_t iv = 0; iv < v; ++iv) {
            Vec tv = t.column(iv);
            // l(u, v, x) = [Tu, Tv, x]
            Matrix ad_tutv = rep.algebra.ad(tu, tv);
            for (std::size_t out = 0; out < d; ++out)
                for (std::size_t ix = 0; ix < d; ++ix)
                    l_act.at({iu, iv, out, ix}) = ad_tutv.at(out, ix);
            // m(u, x, v) = [Tu, x, Tv] - T rho(Tu, x) v, column x of m_act[u][v]
            // r(x, u, v) = [x, Tu, Tv] - T rho(x, Tu) v, column x of r_act[u][v]
            for (std::size_t ix = 0; ix < d; ++ix) {
                Vec ex = unit_vec(d, ix);
                Vec m_val = sub(rep.algebra.bracket(tu, ex, tv),
                                t.apply(rep.rho_vec(tu, ex).column(iv)));
                Vec r_val = sub(rep.algebra.bracket(ex, tu, tv),
                                t.apply(rep.rho_vec(ex, tu).column(iv)));
                for (std::size_t out = 0; out < d; ++out) {
                    m_act.at({iu, iv, out, ix}) = m_val[out];
                    r_act.at({iu, iv, out, ix}) = r_val[out];
                }
            }
        }
    }

    return LeibnizRepresentation(std::move(algebra), d, std::move(l_act), std::move(m_act),
                                 std::move(r_act), rep.algebra.alpha());
}

CheckReport check_et_hom(const EtMorphism& m, const EmbeddingTensor& src,
                         const EmbeddingTensor& dst) {
    const Representation& rep = dst.rep();
    const std::size_t d = rep.algebra.dim();
    const std::size_t v = rep.vdim;
    if (src.dim_l() != d || src.dim_v() != v)
        throw DimensionError("embedding tensors live over different spaces");
    if (m.psi_l.rows() != d || m.psi_l.cols() != d || m.psi_v.rows() != v ||
        m.psi_v.cols() != v)
        throw DimensionError("morphism matrices have the wrong shape");
    CheckReport report;

    CheckReport endo = check_3hl_hom(m.psi_l, rep.algebra, rep.algebra);
    for (auto& f : endo.failures) f.law = "psi-l-endomorphism:" + f.law;
    report.merge(endo);

    Matrix lhs_beta = rep.beta * m.psi_v;
    Matrix rhs_beta = m.psi_v * rep.beta;
    for (std::size_t c = 0; c < v; ++c)
        if (lhs_beta.column(c) != rhs_beta.column(c))
            report.fail("beta-psi-v-commute", {c}, lhs_beta.column(c), rhs_beta.column(c));

    Matrix lhs_t = dst.t() * m.psi_v;
    Matrix rhs_t = m.psi_l * src.t();
    for (std::size_t c = 0; c < v; ++c)
        if (lhs_t.column(c) != rhs_t.column(c))
            report.fail("tensor-intertwining", {c}, lhs_t.column(c), rhs_t.column(c));

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = m.psi_v * rep.rho_basis(i, j);
            Matrix rhs = rep.rho_vec(m.psi_l.column(i), m.psi_l.column(j)) * m.psi_v;
            for (std::size_t u = 0; u < v; ++u)
                if (lhs.column(u) != rhs.column(u))
                    report.fail("action-intertwining", {i, j, u}, lhs.column(u), rhs.column(u));
        }
    return report;
}

EmbeddingTensor identity_tensor(const ThreeHomLieAlgebra& algebra) {
    return EmbeddingTensor::create(adjoint_representation(algebra),
                                   Matrix::identity(algebra.dim()));
}

EmbeddingTensor derivation_tensor(const ThreeHomLieAlgebra& algebra, const Matrix& d) {
    const std::size_t n = algebra.dim();
    if (d.rows() != n || d.cols() != n)
        throw DimensionError("derivation matrix has the wrong shape");
    if (!(d * algebra.alpha() == algebra.alpha() * d))
        throw InvariantViolation("derivation candidate violates alpha d = d alpha");
    for (std::size_t t = 0; t < triple_count(n); ++t) {
        auto [i, j, k] = triple_unrank(t, n);
        Vec lhs = d.apply(algebra.bracket_basis(i, j, k));
        Vec rhs = algebra.bracket(d.column(i), unit_vec(n, j), unit_vec(n, k));
        add_scaled(rhs, 1, algebra.bracket(unit_vec(n, i), d.column(j), unit_vec(n, k)));
        add_scaled(rhs, 1, algebra.bracket(unit_vec(n, i), unit_vec(n, j), d.column(k)));
        if (lhs != rhs)
            throw InvariantViolation("derivation candidate violates the derivation identity");
    }
    if (!(d * d).is_zero())
        throw InvariantViolation("derivation candidate violates d^2 = 0");
    return EmbeddingTensor::create(adjoint_representation(algebra), d);
}

EmbeddingTensor sum_tensor(const ThreeHomLieAlgebra& algebra, std::size_t n) {
    Representation rep = direct_sum_representation(algebra, n);
    const std::size_t d = algebra.dim();
    Matrix t(d, n * d);
    for (std::size_t blk = 0; blk < n; ++blk)
        for (std::size_t r = 0; r < d; ++r) t.at(r, blk * d + r) = 1;
    return EmbeddingTensor::create(std::move(rep), std::move(t));
}

EmbeddingTensor projection_tensor(const ThreeHomLieAlgebra& algebra, std::size_t n,
                                  std::size_t i) {
    if (i < 1 || i > n) throw PreconditionError("projection index must satisfy 1 <= i <= n");
    Representation rep = direct_sum_representation(algebra, n);
    const std::size_t d = algebra.dim();
    Matrix t(d, n * d);
    for (std::size_t r = 0; r < d; ++r) t.at(r, (i - 1) * d + r) = 1;
    return EmbeddingTensor::create(std::move(rep), std::move(t));
}

EmbeddingTensor custom_map_tensor(const ThreeHomLieAlgebra& algebra, const Matrix& f) {
    Representation rep = adjoint_representation(algebra);
    const std::size_t d = algebra.dim();
    if (f.rows() != d || f.cols() != d) throw DimensionError("map matrix has the wrong shape");
    if (!(algebra.alpha() * f == f * rep.beta))
        throw InvariantViolation("map candidate violates alpha f = f beta");
    for (std::size_t x = 0; x < d; ++x) {
        Vec ex = unit_vec(d, x);
        for (std::size_t u = 0; u < d; ++u) {
            Vec fu = f.column(u);
            Matrix rho_x_fu = rep.rho_vec(ex, fu);
            for (std::size_t vv = 0; vv < d; ++vv) {
                Vec lhs = f.apply(rho_x_fu.column(vv));
                Vec rhs = algebra.bracket(ex, fu, f.column(vv));
                if (lhs != rhs)
                    throw InvariantViolation(
                        "map candidate violates f(rho(x, f u) v) = [x, f u, f v]");
            }
        }
    }
    CheckReport report = check_embedding_tensor(rep, f);
    if (!report.passed())
        throw InternalError("map satisfies the printed conditions but fails the "
                            "embedding-tensor equations at law " +
                            report.failures.front().law);
    return EmbeddingTensor::create(std::move(rep), f);
}

} // namespace homtensor
