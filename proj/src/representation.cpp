#include "homtensor/representation.hpp"

#include "homtensor/errors.hpp"

namespace homtensor {

namespace {

std::vector<Vec> columns(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return cols;
}

void compare_columns(const Matrix& lhs, const Matrix& rhs, const char* law,
                     std::vector<std::size_t> tuple, CheckReport& report) {
    for (std::size_t w = 0; w < lhs.cols(); ++w) {
        Vec l = lhs.column(w);
        Vec r = rhs.column(w);
        if (l != r) {
            auto t = tuple;
            t.push_back(w);
            report.fail(law, std::move(t), std::move(l), std::move(r));
        }
    }
}

} // namespace

Representation::Representation(ThreeHomLieAlgebra algebra_, std::size_t vdim_, Tensor rho_,
                               Matrix beta_)
    : algebra(std::move(algebra_)), vdim(vdim_), rho(std::move(rho_)), beta(std::move(beta_)) {
    std::vector<std::size_t> expected{pair_count(algebra.dim()), vdim, vdim};
    if (rho.shape() != expected) throw DimensionError("rho tensor has the wrong shape");
    if (beta.rows() != vdim || beta.cols() != vdim)
        throw DimensionError("beta matrix has the wrong shape");
}

Representation Representation::zero(ThreeHomLieAlgebra algebra, std::size_t vdim, Matrix beta) {
    Tensor rho({pair_count(algebra.dim()), vdim, vdim});
    return Representation(std::move(algebra), vdim, std::move(rho), std::move(beta));
}

Matrix Representation::rho_basis(std::size_t i, std::size_t j) const {
    Matrix m(vdim, vdim);
    if (i == j) return m;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    std::size_t p = pair_index(i, j, algebra.dim());
    for (std::size_t r = 0; r < vdim; ++r)
        for (std::size_t c = 0; c < vdim; ++c)
            m.at(r, c) = flip ? -rho.at({p, r, c}) : rho.at({p, r, c});
    return m;
}

Matrix Representation::rho_vec(const Vec& x, const Vec& y) const {
    const std::size_t d = algebra.dim();
    if (x.size() != d || y.size() != d) throw DimensionError("rho argument length mismatch");
    Matrix m(vdim, vdim);
    for (std::size_t p = 0; p < pair_count(d); ++p) {
        auto [i, j] = pair_unrank(p, d);
        Rat coeff = x[i] * y[j] - x[j] * y[i];
        if (coeff == 0) continue;
        for (std::size_t r = 0; r < vdim; ++r)
            for (std::size_t c = 0; c < vdim; ++c) {
                const Rat& e = rho.at({p, r, c});
                if (e != 0) m.at(r, c) += coeff * e;
            }
    }
    return m;
}

CheckReport check_representation(const Representation& rep) {
    const std::size_t d = rep.algebra.dim();
    CheckReport report;
    const Matrix& beta = rep.beta;
    std::vector<Vec> acol = columns(rep.algebra.alpha());

    // Pair-action twist equivariance on increasing basis pairs; both sides
    // are skew in (x, y), so these generate all pairs.
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Matrix lhs = rep.rho_vec(acol[i], acol[j]) * beta;
            Matrix rhs = beta * rep.rho_basis(i, j);
            compare_columns(lhs, rhs, "rho-twist-equivariance", {i, j}, report);
        }

    // The two quadratic pair-action identities over all basis 4-tuples.
    std::vector<std::vector<Matrix>> rho_ab(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> rho_alpha(d, std::vector<Matrix>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            rho_ab[i][j] = rep.rho_basis(i, j);
            rho_alpha[i][j] = rep.rho_vec(acol[i], acol[j]);
        }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t a = 0; a < d; ++a) {
                Vec bxya = rep.algebra.bracket_basis(x, y, a);
                for (std::size_t b = 0; b < d; ++b) {
                    Vec bxyb = rep.algebra.bracket_basis(x, y, b);
                    Matrix rho_bracket_a = rep.rho_vec(bxya, acol[b]);
                    Matrix rho_bracket_b = rep.rho_vec(bxyb, acol[a]);

                    Matrix lhs3 = rho_alpha[x][y] * rho_ab[a][b] - rho_alpha[a][b] * rho_ab[x][y];
                    Matrix rhs3 = (rho_bracket_a - rho_bracket_b) * beta;
                    compare_columns(lhs3, rhs3, "pair-action-commutator", {x, y, a, b}, report);

                    Matrix lhs4 = rho_bracket_a * beta - rho_alpha[y][a] * rho_ab[x][b];
                    Matrix rhs4 = rho_alpha[a][x] * rho_ab[y][b] + rho_alpha[x][y] * rho_ab[a][b];
                    compare_columns(lhs4, rhs4, "pair-action-bracket", {x, y, a, b}, report);
                }
            }
    return report;
}

Representation adjoint_representation(const ThreeHomLieAlgebra& algebra) {
    if (!check_3hl(algebra).passed())
        throw PreconditionError("adjoint_representation requires a valid 3-Hom-Lie algebra");
    const std::size_t d = algebra.dim();
    Tensor rho({pair_count(d), d, d});
    for (std::size_t p = 0; p < pair_count(d); ++p) {
        auto [i, j] = pair_unrank(p, d);
        for (std::size_t k = 0; k < d; ++k) {
            Vec col = algebra.bracket_basis(i, j, k);
            for (std::size_t r = 0; r < d; ++r) rho.at({p, r, k}) = col[r];
        }
    }
    return Representation(algebra, d, std::move(rho), algebra.alpha());
}

Representation direct_sum_representation(const ThreeHomLieAlgebra& algebra, std::size_t n) {
    if (n < 1) throw PreconditionError("direct_sum_representation requires n >= 1");
    Representation ad = adjoint_representation(algebra);
    const std::size_t d = algebra.dim();
    const std::size_t vdim = n * d;
    Tensor rho({pair_count(d), vdim, vdim});
    for (std::size_t p = 0; p < pair_count(d); ++p)
        for (std::size_t blk = 0; blk < n; ++blk)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    rho.at({p, blk * d + r, blk * d + c}) = ad.rho.at({p, r, c});
    Matrix beta(vdim, vdim);
    for (std::size_t blk = 0; blk < n; ++blk)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                beta.at(blk * d + r, blk * d + c) = algebra.alpha().at(r, c);
    return Representation(algebra, vdim, std::move(rho), std::move(beta));
}

ThreeHomLeibnizAlgebra hemisemidirect_product(const Representation& rep) {
    const std::size_t d = rep.algebra.dim();
    const std::size_t v = rep.vdim;
    const std::size_t total = d + v;
    ThreeHomLeibnizAlgebra out;
    out.dim = total;
    out.bracket3 = Tensor({total, total, total, total});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix rho_ij = rep.rho_basis(i, j);
            for (std::size_t k = 0; k < total; ++k) {
                if (k < d) {
                    Vec b = rep.algebra.bracket_basis(i, j, k);
                    for (std::size_t r = 0; r < d; ++r) out.bracket3.at({i, j, k, r}) = b[r];
                } else {
                    for (std::size_t r = 0; r < v; ++r)
                        out.bracket3.at({i, j, k, d + r}) = rho_ij.at(r, k - d);
                }
            }
        }
    out.twist = Matrix(total, total);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out.twist.at(r, c) = rep.algebra.alpha().at(r, c);
    for (std::size_t r = 0; r < v; ++r)
        for (std::size_t c = 0; c < v; ++c) out.twist.at(d + r, d + c) = rep.beta.at(r, c);
    return out;
}

LeibnizRepresentation::LeibnizRepresentation(ThreeHomLeibnizAlgebra algebra_, std::size_t wdim_,
                                             Tensor l, Tensor m, Tensor r, Matrix beta_)
    : algebra(std::move(algebra_)), wdim(wdim_), l_act(std::move(l)), m_act(std::move(m)),
      r_act(std::move(r)), beta(std::move(beta_)) {
    std::vector<std::size_t> expected{algebra.dim, algebra.dim, wdim, wdim};
    if (l_act.shape() != expected || m_act.shape() != expected || r_act.shape() != expected)
        throw DimensionError("action tensor has the wrong shape");
    if (beta.rows() != wdim || beta.cols() != wdim)
        throw DimensionError("carrier twist has the wrong shape");
}

LeibnizRepresentation LeibnizRepresentation::zero(ThreeHomLeibnizAlgebra algebra,
                                                  std::size_t wdim, Matrix beta) {
    Tensor l({algebra.dim, algebra.dim, wdim, wdim});
    Tensor m = l, r = l;
    return LeibnizRepresentation(std::move(algebra), wdim, std::move(l), std::move(m),
                                 std::move(r), std::move(beta));
}

namespace {

Matrix action_basis(const Tensor& t, std::size_t i, std::size_t j, std::size_t wdim) {
    Matrix m(wdim, wdim);
    for (std::size_t r = 0; r < wdim; ++r)
        for (std::size_t c = 0; c < wdim; ++c) m.at(r, c) = t.at({i, j, r, c});
    return m;
}

Matrix action_vec(const Tensor& t, const Vec& x, const Vec& y, std::size_t wdim) {
    Matrix m(wdim, wdim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            Rat coeff = x[i] * y[j];
            for (std::size_t r = 0; r < wdim; ++r)
                for (std::size_t c = 0; c < wdim; ++c) {
                    const Rat& e = t.at({i, j, r, c});
                    if (e != 0) m.at(r, c) += coeff * e;
                }
        }
    }
    return m;
}

} // namespace

Matrix LeibnizRepresentation::l_basis(std::size_t i, std::size_t j) const {
    return action_basis(l_act, i, j, wdim);
}
Matrix LeibnizRepresentation::m_basis(std::size_t i, std::size_t j) const {
    return action_basis(m_act, i, j, wdim);
}
Matrix LeibnizRepresentation::r_basis(std::size_t i, std::size_t j) const {
    return action_basis(r_act, i, j, wdim);
}

Vec LeibnizRepresentation::l(const Vec& x, const Vec& y, const Vec& u) const {
    return action_vec(l_act, x, y, wdim).apply(u);
}
Vec LeibnizRepresentation::m(const Vec& x, const Vec& u, const Vec& z) const {
    return action_vec(m_act, x, z, wdim).apply(u);
}
Vec LeibnizRepresentation::r(const Vec& u, const Vec& y, const Vec& z) const {
    return action_vec(r_act, y, z, wdim).apply(u);
}

CheckReport check_leibniz_representation(const LeibnizRepresentation& rep) {
    const std::size_t d = rep.algebra.dim;
    CheckReport report;
    const Matrix& beta = rep.beta;
    std::vector<Vec> acol = columns(rep.algebra.twist);

    std::vector<std::vector<Matrix>> lb(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> mb(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> rb(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> la(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> ma(d, std::vector<Matrix>(d));
    std::vector<std::vector<Matrix>> ra(d, std::vector<Matrix>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            lb[i][j] = rep.l_basis(i, j);
            mb[i][j] = rep.m_basis(i, j);
            rb[i][j] = rep.r_basis(i, j);
            la[i][j] = action_vec(rep.l_act, acol[i], acol[j], rep.wdim);
            ma[i][j] = action_vec(rep.m_act, acol[i], acol[j], rep.wdim);
            ra[i][j] = action_vec(rep.r_act, acol[i], acol[j], rep.wdim);
        }
    auto bracket = [&](std::size_t i, std::size_t j, std::size_t k) {
        return rep.algebra.bracket_basis(i, j, k);
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            compare_columns(la[i][j] * beta, beta * lb[i][j], "l-twist-equivariance", {i, j},
                            report);
            compare_columns(ma[i][j] * beta, beta * mb[i][j], "m-twist-equivariance", {i, j},
                            report);
            compare_columns(ra[i][j] * beta, beta * rb[i][j], "r-twist-equivariance", {i, j},
                            report);
        }

    // Each law quantifies over four algebra indices and one carrier index;
    // (p, q, s, t) plays the role its law assigns.
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t) {
                    // l([p,q,s], a(t), b(u)) + l(a(s), [p,q,t], b(u)) + l(a(s), a(t), l(p,q,u))
                    //   = l(a(p), a(q), l(s,t,u))
                    {
                        Matrix lhs = action_vec(rep.l_act, bracket(p, q, s), acol[t], rep.wdim) * beta +
                                     action_vec(rep.l_act, acol[s], bracket(p, q, t), rep.wdim) * beta +
                                     la[s][t] * lb[p][q];
                        compare_columns(lhs, la[p][q] * lb[s][t], "action-law-1", {p, q, s, t},
                                        report);
                    }
                    // m([p,q,s], b(u), a(t)) + m(a(s), l(p,q,u), a(t)) + m(a(s), b(u), [p,q,t])
                    //   = l(a(p), a(q), m(s,u,t))
                    {
                        Matrix lhs = action_vec(rep.m_act, bracket(p, q, s), acol[t], rep.wdim) * beta +
                                     ma[s][t] * lb[p][q] +
                                     action_vec(rep.m_act, acol[s], bracket(p, q, t), rep.wdim) * beta;
                        compare_columns(lhs, la[p][q] * mb[s][t], "action-law-2", {p, q, s, t},
                                        report);
                    }
                    // r(l(p,q,u), a(s), a(t)) + r(b(u), [p,q,s], a(t)) + r(b(u), a(s), [p,q,t])
                    //   = l(a(p), a(q), r(u,s,t))
                    {
                        Matrix lhs = ra[s][t] * lb[p][q] +
                                     action_vec(rep.r_act, bracket(p, q, s), acol[t], rep.wdim) * beta +
                                     action_vec(rep.r_act, acol[s], bracket(p, q, t), rep.wdim) * beta;
                        compare_columns(lhs, la[p][q] * rb[s][t], "action-law-3", {p, q, s, t},
                                        report);
                    }
                    // r(m(p,u,q), a(s), a(t)) + m(a(q), m(p,u,s), a(t)) + l(a(q), a(s), m(p,u,t))
                    //   = m(a(p), b(u), [q,s,t])
                    {
                        Matrix lhs = ra[s][t] * mb[p][q] + ma[q][t] * mb[p][s] +
                                     la[q][s] * mb[p][t];
                        Matrix rhs =
                            action_vec(rep.m_act, acol[p], bracket(q, s, t), rep.wdim) * beta;
                        compare_columns(lhs, rhs, "action-law-4", {p, q, s, t}, report);
                    }
                    // r(r(u,p,q), a(s), a(t)) + m(a(q), r(u,p,s), a(t)) + l(a(q), a(s), r(u,p,t))
                    //   = r(b(u), a(p), [q,s,t])
                    {
                        Matrix lhs = ra[s][t] * rb[p][q] + ma[q][t] * rb[p][s] +
                                     la[q][s] * rb[p][t];
                        Matrix rhs =
                            action_vec(rep.r_act, acol[p], bracket(q, s, t), rep.wdim) * beta;
                        compare_columns(lhs, rhs, "action-law-5", {p, q, s, t}, report);
                    }
                }
    return report;
}

} // namespace homtensor
