#include "homtensor/algebra.hpp"

#include "homtensor/errors.hpp"

namespace homtensor {

namespace {

// Precomputed bilinear "plug two arguments" forms of a trilinear bracket,
// used to keep the basis-tuple checkers at matrix-vector cost per tuple.
struct TriMaps {
    // left[i][j]  : z -> [c_i, c_j, z]
    // mid[i][k]   : y -> [c_i, y, c_k]
    // right[j][k] : x -> [x, c_j, c_k]
    std::vector<std::vector<Matrix>> left, mid, right;
};

template <typename BracketBasis>
TriMaps make_tri_maps(std::size_t dim, const std::vector<Vec>& args,
                      BracketBasis&& bracket_basis) {
    // args[i] is the i-th argument vector (typically twist columns).
    TriMaps maps;
    auto alloc = [&] {
        return std::vector<std::vector<Matrix>>(
            args.size(), std::vector<Matrix>(args.size(), Matrix(dim, dim)));
    };
    maps.left = alloc();
    maps.mid = alloc();
    maps.right = alloc();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Vec b = bracket_basis(i, j, k);
                if (is_zero(b)) continue;
                for (std::size_t a = 0; a < args.size(); ++a)
                    for (std::size_t c = 0; c < args.size(); ++c) {
                        // left[a][c] column k += args[a][i] args[c][j] * b
                        Rat f_left = args[a][i] * args[c][j];
                        if (f_left != 0)
                            for (std::size_t r = 0; r < dim; ++r)
                                maps.left[a][c].at(r, k) += f_left * b[r];
                        Rat f_mid = args[a][i] * args[c][k];
                        if (f_mid != 0)
                            for (std::size_t r = 0; r < dim; ++r)
                                maps.mid[a][c].at(r, j) += f_mid * b[r];
                        Rat f_right = args[a][j] * args[c][k];
                        if (f_right != 0)
                            for (std::size_t r = 0; r < dim; ++r)
                                maps.right[a][c].at(r, i) += f_right * b[r];
                    }
            }
    return maps;
}

std::vector<Vec> matrix_columns(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return cols;
}

template <typename BracketBasis>
std::vector<Vec> bracket_table(std::size_t dim, BracketBasis&& bracket_basis) {
    std::vector<Vec> table;
    table.reserve(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) table.push_back(bracket_basis(i, j, k));
    return table;
}

// Shared engine for the twisted ternary Leibniz / Filippov identity: both
// Eq-style identities have the same five-tuple shape once the bracket and
// twist are fixed.
template <typename BracketBasis>
void check_fundamental_identity(std::size_t d, const Matrix& twist,
                                BracketBasis&& bracket_basis, const char* law,
                                CheckReport& report) {
    std::vector<Vec> table = bracket_table(d, bracket_basis);
    auto b = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec& {
        return table[(i * d + j) * d + k];
    };
    TriMaps maps = make_tri_maps(d, matrix_columns(twist), bracket_basis);
    for (std::size_t ia = 0; ia < d; ++ia)
        for (std::size_t ib = 0; ib < d; ++ib) {
            const Matrix& left_ab = maps.left[ia][ib];
            for (std::size_t ix = 0; ix < d; ++ix)
                for (std::size_t iy = 0; iy < d; ++iy) {
                    const Matrix& left_xy = maps.left[ix][iy];
                    for (std::size_t iz = 0; iz < d; ++iz) {
                        Vec lhs = left_ab.apply(b(ix, iy, iz));
                        Vec rhs = maps.right[iy][iz].apply(b(ia, ib, ix));
                        add_scaled(rhs, 1, maps.mid[ix][iz].apply(b(ia, ib, iy)));
                        add_scaled(rhs, 1, left_xy.apply(b(ia, ib, iz)));
                        if (lhs != rhs) report.fail(law, {ia, ib, ix, iy, iz}, lhs, rhs);
                    }
                }
        }
}

} // namespace

ThreeHomLieAlgebra::ThreeHomLieAlgebra(std::size_t dim, Tensor bracket, Matrix alpha)
    : dim_(dim), bracket_(std::move(bracket)), alpha_(std::move(alpha)) {
    std::vector<std::size_t> expected{triple_count(dim), dim};
    if (bracket_.shape() != expected)
        throw DimensionError("3-Hom-Lie bracket tensor has the wrong shape");
    if (alpha_.rows() != dim || alpha_.cols() != dim)
        throw DimensionError("twist matrix has the wrong shape");
}

ThreeHomLieAlgebra ThreeHomLieAlgebra::from_entries(
    std::size_t dim, const std::map<std::array<std::size_t, 3>, Vec>& entries, Matrix alpha) {
    Tensor bracket({triple_count(dim), dim});
    for (const auto& [triple, value] : entries) {
        auto [i, j, k] = triple;
        if (!(i < j && j < k && k < dim))
            throw DimensionError("bracket entries must use strictly increasing triples");
        if (value.size() != dim) throw DimensionError("bracket value has the wrong length");
        std::size_t t = triple_index(i, j, k, dim);
        for (std::size_t r = 0; r < dim; ++r) bracket.at({t, r}) = value[r];
    }
    return ThreeHomLieAlgebra(dim, std::move(bracket), std::move(alpha));
}

ThreeHomLieAlgebra ThreeHomLieAlgebra::abelian(std::size_t dim, Matrix alpha) {
    return ThreeHomLieAlgebra(dim, Tensor({triple_count(dim), dim}), std::move(alpha));
}

Vec ThreeHomLieAlgebra::bracket_basis(std::size_t i, std::size_t j, std::size_t k) const {
    int sign = sort_triple(i, j, k);
    if (sign == 0) return zero_vec(dim_);
    std::size_t t = triple_index(i, j, k, dim_);
    Vec out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        out[r] = sign > 0 ? bracket_.at({t, r}) : -bracket_.at({t, r});
    return out;
}

Vec ThreeHomLieAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
        throw DimensionError("bracket argument length mismatch");
    Vec out = zero_vec(dim_);
    for (std::size_t t = 0; t < triple_count(dim_); ++t) {
        auto [i, j, k] = triple_unrank(t, dim_);
        // Alternating trilinear coefficient of the canonical triple: the
        // 3x3 determinant of the (i,j,k) components of (x,y,z).
        Rat coeff = x[i] * (y[j] * z[k] - y[k] * z[j]) - y[i] * (x[j] * z[k] - x[k] * z[j]) +
                    z[i] * (x[j] * y[k] - x[k] * y[j]);
        if (coeff == 0) continue;
        for (std::size_t r = 0; r < dim_; ++r) {
            const Rat& b = bracket_.at({t, r});
            if (b != 0) out[r] += coeff * b;
        }
    }
    return out;
}

Matrix ThreeHomLieAlgebra::ad(const Vec& x, const Vec& y) const {
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        Vec col = bracket(x, y, unit_vec(dim_, k));
        for (std::size_t r = 0; r < dim_; ++r) m.at(r, k) = col[r];
    }
    return m;
}

Vec HomLeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec out(dim);
    for (std::size_t r = 0; r < dim; ++r) out[r] = bracket2.at({i, j, r});
    return out;
}

Vec HomLeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim)
        throw DimensionError("binary bracket argument length mismatch");
    Vec out = zero_vec(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Rat coeff = x[i] * y[j];
            for (std::size_t r = 0; r < dim; ++r) {
                const Rat& b = bracket2.at({i, j, r});
                if (b != 0) out[r] += coeff * b;
            }
        }
    }
    return out;
}

Vec ThreeHomLeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j, std::size_t k) const {
    Vec out(dim);
    for (std::size_t r = 0; r < dim; ++r) out[r] = bracket3.at({i, j, k, r});
    return out;
}

Vec ThreeHomLeibnizAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != dim || y.size() != dim || z.size() != dim)
        throw DimensionError("ternary bracket argument length mismatch");
    Vec out = zero_vec(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Rat cij = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                if (z[k] == 0) continue;
                Rat coeff = cij * z[k];
                for (std::size_t r = 0; r < dim; ++r) {
                    const Rat& b = bracket3.at({i, j, k, r});
                    if (b != 0) out[r] += coeff * b;
                }
            }
        }
    }
    return out;
}

ThreeHomLeibnizAlgebra as_leibniz(const ThreeHomLieAlgebra& algebra) {
    const std::size_t d = algebra.dim();
    ThreeHomLeibnizAlgebra out;
    out.dim = d;
    out.twist = algebra.alpha();
    out.bracket3 = Tensor({d, d, d, d});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec b = algebra.bracket_basis(i, j, k);
                for (std::size_t r = 0; r < d; ++r) out.bracket3.at({i, j, k, r}) = b[r];
            }
    return out;
}

CheckReport check_3hl(const ThreeHomLieAlgebra& algebra) {
    const std::size_t d = algebra.dim();
    CheckReport report;

    // Skew consistency of the derived evaluation: swapping adjacent
    // arguments negates, repeated arguments vanish.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec diag = algebra.bracket_basis(i, i, j);
            if (!is_zero(diag))
                report.fail("skew-consistency", {i, i, j}, diag, zero_vec(d));
            for (std::size_t k = 0; k < d; ++k) {
                Vec fwd = algebra.bracket_basis(i, j, k);
                Vec swapped = algebra.bracket_basis(j, i, k);
                if (!is_zero(add(fwd, swapped)))
                    report.fail("skew-consistency", {i, j, k}, fwd, negate(swapped));
            }
        }

    // Multiplicativity of the twist on canonical triples.
    const Matrix& a = algebra.alpha();
    for (std::size_t t = 0; t < triple_count(d); ++t) {
        auto [i, j, k] = triple_unrank(t, d);
        Vec lhs = a.apply(algebra.bracket_basis(i, j, k));
        Vec rhs = algebra.bracket(a.column(i), a.column(j), a.column(k));
        if (lhs != rhs) report.fail("alpha-multiplicative", {i, j, k}, lhs, rhs);
    }

    // Hom-Filippov-Jacobi identity over all basis 5-tuples (a, b, x, y, z).
    auto bracket_basis = [&](std::size_t i, std::size_t j, std::size_t k) {
        return algebra.bracket_basis(i, j, k);
    };
    check_fundamental_identity(d, a, bracket_basis, "hom-filippov-jacobi", report);
    return report;
}

CheckReport check_3hl_hom(const Matrix& psi, const ThreeHomLieAlgebra& src,
                          const ThreeHomLieAlgebra& dst) {
    if (psi.cols() != src.dim() || psi.rows() != dst.dim())
        throw DimensionError("homomorphism matrix shape does not match the algebras");
    CheckReport report;
    Matrix lhs_twist = psi * src.alpha();
    Matrix rhs_twist = dst.alpha() * psi;
    for (std::size_t c = 0; c < psi.cols(); ++c) {
        if (lhs_twist.column(c) != rhs_twist.column(c))
            report.fail("twist-compatibility", {c}, lhs_twist.column(c), rhs_twist.column(c));
    }
    for (std::size_t t = 0; t < triple_count(src.dim()); ++t) {
        auto [i, j, k] = triple_unrank(t, src.dim());
        Vec lhs = psi.apply(src.bracket_basis(i, j, k));
        Vec rhs = dst.bracket(psi.column(i), psi.column(j), psi.column(k));
        if (lhs != rhs) report.fail("bracket-compatibility", {i, j, k}, lhs, rhs);
    }
    return report;
}

HomLeibnizAlgebra fundamental_bracket(const ThreeHomLieAlgebra& algebra) {
    CheckReport base = check_3hl(algebra);
    if (!base.passed())
        throw PreconditionError("fundamental_bracket requires a valid 3-Hom-Lie algebra");
    const std::size_t d = algebra.dim();
    const std::size_t p = pair_count(d);
    HomLeibnizAlgebra out;
    out.dim = p;
    out.twist = wedge_square(algebra.alpha());
    out.bracket2 = Tensor({p, p, p});
    for (std::size_t pq = 0; pq < p; ++pq) {
        auto [x1, x2] = pair_unrank(pq, d);
        for (std::size_t qr = 0; qr < p; ++qr) {
            auto [y1, y2] = pair_unrank(qr, d);
            Vec value = wedge_coords(algebra.bracket_basis(x1, x2, y1),
                                     algebra.alpha().column(y2));
            add_scaled(value, 1,
                       wedge_coords(algebra.alpha().column(y1),
                                    algebra.bracket_basis(x1, x2, y2)));
            for (std::size_t r = 0; r < p; ++r) out.bracket2.at({pq, qr, r}) = value[r];
        }
    }
    return out;
}

CheckReport check_hom_leibniz(const HomLeibnizAlgebra& algebra, bool include_printed_variant) {
    const std::size_t d = algebra.dim;
    CheckReport report;
    const Matrix& tw = algebra.twist;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs = tw.apply(algebra.bracket_basis(i, j));
            Vec rhs = algebra.bracket(tw.column(i), tw.column(j));
            if (lhs != rhs) report.fail("twist-multiplicative", {i, j}, lhs, rhs);
        }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vec lhs = algebra.bracket(tw.column(x), algebra.bracket_basis(y, z));
                Vec rhs = algebra.bracket(algebra.bracket_basis(x, y), tw.column(z));
                add_scaled(rhs, 1,
                           algebra.bracket(tw.column(y), algebra.bracket_basis(x, z)));
                if (lhs != rhs) report.fail("hom-leibniz-identity", {x, y, z}, lhs, rhs);
                if (include_printed_variant) {
                    Vec rhs_printed = algebra.bracket(algebra.bracket_basis(x, y), tw.column(z));
                    add_scaled(rhs_printed, 1,
                               algebra.bracket(tw.column(y), algebra.bracket_basis(x, y)));
                    if (lhs != rhs_printed)
                        report.note("hom-leibniz-identity-printed-variant", {x, y, z}, lhs,
                                    rhs_printed);
                }
            }
    return report;
}

CheckReport check_3h_leibniz(const ThreeHomLeibnizAlgebra& algebra) {
    const std::size_t d = algebra.dim;
    CheckReport report;
    const Matrix& tw = algebra.twist;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = tw.apply(algebra.bracket_basis(i, j, k));
                Vec rhs = algebra.bracket(tw.column(i), tw.column(j), tw.column(k));
                if (lhs != rhs) report.fail("twist-multiplicative", {i, j, k}, lhs, rhs);
            }

    auto bracket_basis = [&](std::size_t i, std::size_t j, std::size_t k) {
        return algebra.bracket_basis(i, j, k);
    };
    check_fundamental_identity(d, tw, bracket_basis, "ternary-leibniz-identity", report);
    return report;
}

CheckReport check_3h_leibniz_hom(const Matrix& psi, const ThreeHomLeibnizAlgebra& src,
                                 const ThreeHomLeibnizAlgebra& dst) {
    if (psi.cols() != src.dim || psi.rows() != dst.dim)
        throw DimensionError("homomorphism matrix shape does not match the algebras");
    CheckReport report;
    Matrix lhs_twist = psi * src.twist;
    Matrix rhs_twist = dst.twist * psi;
    for (std::size_t c = 0; c < psi.cols(); ++c) {
        if (lhs_twist.column(c) != rhs_twist.column(c))
            report.fail("twist-compatibility", {c}, lhs_twist.column(c), rhs_twist.column(c));
    }
    for (std::size_t i = 0; i < src.dim; ++i)
        for (std::size_t j = 0; j < src.dim; ++j)
            for (std::size_t k = 0; k < src.dim; ++k) {
                Vec lhs = psi.apply(src.bracket_basis(i, j, k));
                Vec rhs = dst.bracket(psi.column(i), psi.column(j), psi.column(k));
                if (lhs != rhs) report.fail("bracket-compatibility", {i, j, k}, lhs, rhs);
            }
    return report;
}

} // namespace homtensor
