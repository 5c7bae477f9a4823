#include "homtensor/cohomology.hpp"

#include "homtensor/errors.hpp"
#include "homtensor/indexing.hpp"

#include <string>

namespace homtensor {

namespace {

std::size_t checked_coeff_count(std::size_t degree, std::size_t alg_dim,
                                std::size_t carrier_dim, std::size_t capacity) {
    const std::size_t p = pair_count(alg_dim);
    std::size_t total = alg_dim * carrier_dim;
    for (std::size_t slot = 1; slot < degree; ++slot) {
        if (p == 0) return 0;
        if (total > capacity / p + 1) // conservative: avoids overflow before the final check
            throw CapacityError("cochain space of degree " + std::to_string(degree) +
                                " exceeds the capacity bound of " + std::to_string(capacity) +
                                " coefficients");
        total *= p;
    }
    if (total > capacity)
        throw CapacityError("cochain space of degree " + std::to_string(degree) + " has " +
                            std::to_string(total) + " coefficients, exceeding the bound of " +
                            std::to_string(capacity));
    return total;
}

} // namespace

std::vector<std::size_t> Cochain::coeff_shape(std::size_t degree, std::size_t alg_dim,
                                              std::size_t carrier_dim) {
    std::vector<std::size_t> shape(degree - 1, pair_count(alg_dim));
    shape.push_back(alg_dim);
    shape.push_back(carrier_dim);
    return shape;
}

Cochain Cochain::zero(std::size_t degree, std::size_t alg_dim, std::size_t carrier_dim) {
    if (degree < 1) throw PreconditionError("cochain degree must be at least 1");
    Cochain f;
    f.degree = degree;
    f.alg_dim = alg_dim;
    f.carrier_dim = carrier_dim;
    f.coeffs = Tensor(coeff_shape(degree, alg_dim, carrier_dim));
    return f;
}

Cochain Cochain::from_matrix(const Matrix& m) {
    Cochain f = zero(1, m.cols(), m.rows());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t o = 0; o < m.rows(); ++o) f.coeffs.at({i, o}) = m.at(o, i);
    return f;
}

Vec Cochain::value(const std::vector<std::size_t>& pair_slots, std::size_t last) const {
    if (pair_slots.size() + 1 != degree)
        throw DimensionError("cochain evaluated with the wrong number of arguments");
    const std::size_t p = pair_count(alg_dim);
    std::size_t base = 0;
    for (auto q : pair_slots) {
        if (q >= p) throw DimensionError("pair rank out of range");
        base = base * p + q;
    }
    base = (base * alg_dim + last) * carrier_dim;
    Vec out(carrier_dim);
    for (std::size_t o = 0; o < carrier_dim; ++o) out[o] = coeffs.flat(base + o);
    return out;
}

Vec Cochain::eval(const std::vector<Vec>& pair_args, const Vec& last) const {
    if (pair_args.size() + 1 != degree)
        throw DimensionError("cochain evaluated with the wrong number of arguments");
    const std::size_t p = pair_count(alg_dim);
    if (last.size() != alg_dim) throw DimensionError("cochain last argument length mismatch");
    Vec out = zero_vec(carrier_dim);
    // Multilinear contraction with zero-skipping per slot.
    auto rec = [&](auto&& self, std::size_t slot, std::size_t base, const Rat& coeff) -> void {
        if (slot == pair_args.size()) {
            for (std::size_t i = 0; i < alg_dim; ++i) {
                if (last[i] == 0) continue;
                Rat c = coeff * last[i];
                std::size_t offset = (base * alg_dim + i) * carrier_dim;
                for (std::size_t o = 0; o < carrier_dim; ++o) {
                    const Rat& e = coeffs.flat(offset + o);
                    if (e != 0) out[o] += c * e;
                }
            }
            return;
        }
        const Vec& arg = pair_args[slot];
        if (arg.size() != p) throw DimensionError("cochain pair argument length mismatch");
        for (std::size_t q = 0; q < p; ++q) {
            if (arg[q] == 0) continue;
            self(self, slot + 1, base * p + q, coeff * arg[q]);
        }
    };
    rec(rec, 0, 0, Rat(1));
    return out;
}

Matrix Cochain::as_matrix() const {
    if (degree != 1) throw DimensionError("only degree-1 cochains are matrices");
    Matrix m(carrier_dim, alg_dim);
    for (std::size_t i = 0; i < alg_dim; ++i)
        for (std::size_t o = 0; o < carrier_dim; ++o) m.at(o, i) = coeffs.at({i, o});
    return m;
}

Vec Cochain::flat() const {
    Vec v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs.flat(i);
    return v;
}

Vec CochainSpace::coords(const Cochain& f) const {
    if (f.degree != degree || f.alg_dim != alg_dim || f.carrier_dim != carrier_dim)
        throw DimensionError("cochain does not match this cochain space");
    Vec full = f.flat();
    Vec c = kernel.coords_of(full);
    if (kernel.reconstruct(c) != full)
        throw InvariantViolation("cochain is not equivariant (not in the cochain space)");
    return c;
}

Cochain CochainSpace::cochain_from_coords(const Vec& coords) const {
    Cochain f = Cochain::zero(degree, alg_dim, carrier_dim);
    Vec full = kernel.reconstruct(coords);
    for (std::size_t i = 0; i < full.size(); ++i) f.coeffs.flat(i) = full[i];
    return f;
}

CochainSpace cochain_space_for(std::size_t degree, std::size_t alg_dim, const Matrix& alg_twist,
                               std::size_t carrier_dim, const Matrix& carrier_twist,
                               std::size_t capacity) {
    if (degree < 1) throw PreconditionError("cochain degree must be at least 1");
    const std::size_t total = checked_coeff_count(degree, alg_dim, carrier_dim, capacity);
    const std::size_t p = pair_count(alg_dim);
    const std::size_t n_slots = degree - 1;

    CochainSpace space;
    space.degree = degree;
    space.alg_dim = alg_dim;
    space.carrier_dim = carrier_dim;
    if (total == 0) {
        space.kernel = sparse_kernel(0, {});
        return space;
    }

    Matrix wedge = wedge_square(alg_twist);
    // Nonzero entries per column of the wedge map and the algebra twist.
    std::vector<SparseRow> wedge_cols(p), twist_cols(alg_dim);
    for (std::size_t c = 0; c < p; ++c)
        for (std::size_t r = 0; r < p; ++r)
            if (wedge.at(r, c) != 0) wedge_cols[c].emplace_back(r, wedge.at(r, c));
    for (std::size_t c = 0; c < alg_dim; ++c)
        for (std::size_t r = 0; r < alg_dim; ++r)
            if (alg_twist.at(r, c) != 0) twist_cols[c].emplace_back(r, alg_twist.at(r, c));

    std::vector<SparseRow> rows;
    rows.reserve(total);
    std::vector<std::size_t> q(n_slots, 0);
    while (true) {
        for (std::size_t i = 0; i < alg_dim; ++i)
            for (std::size_t o = 0; o < carrier_dim; ++o) {
                // Row for output coordinate (q, i, o) of
                // carrier_twist . f - f . (wedge^(n-1) (x) twist).
                std::map<std::size_t, Rat> row;
                std::size_t base_q = 0;
                for (auto qe : q) base_q = base_q * p + qe;
                for (std::size_t o2 = 0; o2 < carrier_dim; ++o2) {
                    const Rat& c = carrier_twist.at(o, o2);
                    if (c != 0) row[(base_q * alg_dim + i) * carrier_dim + o2] += c;
                }
                // Expand f(wedge X_{q_1}, ..., twist e_i) over basis tuples.
                std::vector<std::size_t> pp(n_slots, 0);
                auto expand = [&](auto&& self, std::size_t slot, std::size_t base,
                                  const Rat& coeff) -> void {
                    if (slot == n_slots) {
                        for (const auto& [i2, bval] : twist_cols[i])
                            row[(base * alg_dim + i2) * carrier_dim + o] -= coeff * bval;
                        return;
                    }
                    for (const auto& [p2, wval] : wedge_cols[q[slot]])
                        self(self, slot + 1, base * p + p2, coeff * wval);
                };
                expand(expand, 0, 0, Rat(1));
                SparseRow sparse;
                for (const auto& [col, val] : row)
                    if (val != 0) sparse.emplace_back(col, val);
                if (!sparse.empty()) rows.push_back(std::move(sparse));
            }
        // Advance the odometer over pair-slot ranks.
        std::size_t slot = n_slots;
        while (slot > 0) {
            --slot;
            if (++q[slot] < p) break;
            q[slot] = 0;
            if (slot == 0) { slot = SIZE_MAX; break; }
        }
        if (n_slots == 0 || slot == SIZE_MAX) break;
    }

    space.kernel = sparse_kernel(total, rows);
    return space;
}

CochainSpace cochain_space(const EmbeddingTensor& et, std::size_t degree, std::size_t capacity) {
    return cochain_space_for(degree, et.dim_v(), et.rep().beta, et.dim_l(),
                             et.algebra().alpha(), capacity);
}

SubspaceBasis cochain_space_basis(const EmbeddingTensor& et, std::size_t degree,
                                  std::size_t capacity) {
    return cochain_space(et, degree, capacity).kernel.to_basis();
}

Cochain general_coboundary(const ThreeHomLeibnizAlgebra& algebra,
                           const LeibnizRepresentation& rep, const Cochain& f) {
    const std::size_t da = algebra.dim;
    const std::size_t dc = rep.wdim;
    if (f.alg_dim != da || f.carrier_dim != dc || rep.algebra.dim != da)
        throw DimensionError("cochain does not match the algebra/representation pair");
    const std::size_t n = f.degree;
    const std::size_t p = pair_count(da);

    const Matrix& twist = algebra.twist;
    Matrix wedge = wedge_square(twist);
    Matrix twist_pow = matrix_power(twist, n - 1);

    // Cached basis data.
    std::vector<Vec> twist_col(da), twist_pow_col(da), wedge_col(p);
    for (std::size_t i = 0; i < da; ++i) {
        twist_col[i] = twist.column(i);
        twist_pow_col[i] = twist_pow.column(i);
    }
    for (std::size_t q = 0; q < p; ++q) wedge_col[q] = wedge.column(q);
    std::vector<Vec> btable;
    btable.reserve(da * da * da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k)
                btable.push_back(algebra.bracket_basis(i, j, k));
    auto bracket = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec& {
        return btable[(i * da + j) * da + k];
    };

    Cochain out = Cochain::zero(n + 1, da, dc);
    if (out.coeffs.size() == 0) return out; // no wedge pairs to quantify over
    std::vector<std::size_t> q(n, 0); // pair ranks of X_1..X_n (0-based slots)
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> xy(n);
        for (std::size_t t = 0; t < n; ++t) xy[t] = pair_unrank(q[t], da);
        for (std::size_t w = 0; w < da; ++w) {
            Vec total = zero_vec(dc);

            // Sum over 1 <= j < k <= n: insert the bracketed pair at slot k.
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    std::vector<Vec> args;
                    args.reserve(n - 1);
                    for (std::size_t t = 0; t < n; ++t) {
                        if (t == j) continue;
                        if (t == k) {
                            Vec mod = wedge_coords(twist_col[xy[k].first],
                                                   bracket(xy[j].first, xy[j].second,
                                                           xy[k].second));
                            add_scaled(mod, 1,
                                       wedge_coords(bracket(xy[j].first, xy[j].second,
                                                            xy[k].first),
                                                    twist_col[xy[k].second]));
                            args.push_back(std::move(mod));
                        } else {
                            args.push_back(wedge_col[q[t]]);
                        }
                    }
                    Vec term = f.eval(args, twist_col[w]);
                    if ((j + 1) % 2 == 1) term = negate(term);
                    add_scaled(total, 1, term);
                }

            // Sum over j: replace the last argument by [x_j, y_j, z].
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Vec> args;
                args.reserve(n - 1);
                for (std::size_t t = 0; t < n; ++t)
                    if (t != j) args.push_back(wedge_col[q[t]]);
                Vec term = f.eval(args, bracket(xy[j].first, xy[j].second, w));
                if ((j + 1) % 2 == 1) term = negate(term);
                add_scaled(total, 1, term);
            }

            // l-action terms: arguments of f stay untwisted.
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::size_t> slots;
                slots.reserve(n - 1);
                for (std::size_t t = 0; t < n; ++t)
                    if (t != j) slots.push_back(q[t]);
                Vec inner = f.value(slots, w);
                Vec term = rep.l(twist_pow_col[xy[j].first], twist_pow_col[xy[j].second], inner);
                if ((j + 1) % 2 == 0) term = negate(term);
                add_scaled(total, 1, term);
            }

            // Final m/r terms on the last pair slot.
            {
                std::vector<std::size_t> slots(q.begin(), q.end() - 1);
                Vec f_yn = f.value(slots, xy[n - 1].second);
                Vec f_xn = f.value(slots, xy[n - 1].first);
                Vec term = rep.m(twist_pow_col[xy[n - 1].first], f_yn, twist_pow_col[w]);
                add_scaled(term, 1, rep.r(f_xn, twist_pow_col[xy[n - 1].second], twist_pow_col[w]));
                if (n % 2 == 0) term = negate(term); // sign (-1)^(n+1)
                add_scaled(total, 1, term);
            }

            std::size_t base = 0;
            for (auto qe : q) base = base * p + qe;
            base = (base * da + w) * dc;
            for (std::size_t o = 0; o < dc; ++o) out.coeffs.flat(base + o) = total[o];
        }
        // Advance the odometer over output pair tuples.
        if (n == 0 || p == 0) break;
        std::size_t slot = n;
        bool done = false;
        while (slot > 0) {
            --slot;
            if (++q[slot] < p) break;
            q[slot] = 0;
            if (slot == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

Cochain coboundary_degree1(const EmbeddingTensor& et, const Matrix& g) {
    const std::size_t d = et.dim_l();
    const std::size_t v = et.dim_v();
    if (g.rows() != d || g.cols() != v)
        throw DimensionError("degree-1 cochain matrix has the wrong shape");
    const Representation& rep = et.rep();
    const Matrix& t = et.t();
    Cochain out = Cochain::zero(2, v, d);
    for (std::size_t iu = 0; iu + 1 < v; ++iu) {
        Vec tu = t.column(iu);
        Vec gu = g.column(iu);
        for (std::size_t iv = iu + 1; iv < v; ++iv) {
            Vec tv = t.column(iv);
            Vec gv = g.column(iv);
            Matrix rho_tutv = rep.rho_vec(tu, tv);
            Matrix t_rho_tu_gv = t * rep.rho_vec(tu, gv);
            Matrix t_rho_gu_tv = t * rep.rho_vec(gu, tv);
            std::size_t pr = pair_index(iu, iv, v);
            for (std::size_t iw = 0; iw < v; ++iw) {
                Vec value = negate(g.apply(rho_tutv.column(iw)));
                add_scaled(value, 1, rep.algebra.bracket(tu, tv, g.column(iw)));
                add_scaled(value, 1, rep.algebra.bracket(tu, gv, t.column(iw)));
                add_scaled(value, -1, t_rho_tu_gv.column(iw));
                add_scaled(value, 1, rep.algebra.bracket(gu, tv, t.column(iw)));
                add_scaled(value, -1, t_rho_gu_tv.column(iw));
                for (std::size_t o = 0; o < d; ++o) out.coeffs.at({pr, iw, o}) = value[o];
            }
        }
    }
    return out;
}

Matrix coboundary_matrix(const EmbeddingTensor& et, std::size_t degree, std::size_t capacity) {
    CochainSpace source = cochain_space(et, degree, capacity);
    CochainSpace target = cochain_space(et, degree + 1, capacity);
    ThreeHomLeibnizAlgebra algebra = induced_leibniz(et);
    LeibnizRepresentation rep = induced_representation(et);

    Matrix out(target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
        Cochain basis_cochain = source.cochain_from_coords(unit_vec(source.dim(), j));
        Cochain image = general_coboundary(algebra, rep, basis_cochain);
        Vec coords;
        try {
            coords = target.coords(image);
        } catch (const InvariantViolation&) {
            throw InternalError(
                "coboundary of an equivariant cochain failed to be equivariant");
        }
        for (std::size_t r = 0; r < target.dim(); ++r) out.at(r, j) = coords[r];
    }
    return out;
}

Cochain wp(const EmbeddingTensor& et, const Vec& a, const Vec& b) {
    const std::size_t d = et.dim_l();
    if (a.size() != d || b.size() != d)
        throw DimensionError("wp arguments must be vectors in the algebra");
    if (!inverse(et.algebra().alpha()))
        throw RegularityError("wp requires an invertible twist alpha");
    auto beta_inv = inverse(et.rep().beta);
    if (!beta_inv) throw RegularityError("wp requires an invertible twist beta");
    if (et.algebra().alpha().apply(a) != a)
        throw InvariantViolation("wp requires alpha(a) = a");
    if (et.algebra().alpha().apply(b) != b)
        throw InvariantViolation("wp requires alpha(b) = b");
    Matrix m = (et.t() * et.rep().rho_vec(a, b) - et.algebra().ad(a, b) * et.t()) * *beta_inv;
    return Cochain::from_matrix(m);
}

SubspaceBasis zero_cochain_space(const EmbeddingTensor& et) {
    return kernel_basis(et.algebra().alpha() - Matrix::identity(et.dim_l()));
}

namespace {

/// Degree-1 coboundary space in C^1 coordinates: the span of wp over basis
/// pairs of Fix(alpha). Empty with the non_regular flag when a twist is not
/// invertible.
SubspaceBasis degree1_coboundary_space(const EmbeddingTensor& et, const CochainSpace& c1,
                                       bool& non_regular) {
    non_regular = false;
    if (!inverse(et.algebra().alpha()) || !inverse(et.rep().beta)) {
        non_regular = true;
        SubspaceBasis empty;
        empty.ambient_dim = c1.dim();
        return empty;
    }
    SubspaceBasis fix = zero_cochain_space(et);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i + 1 < fix.dim(); ++i)
        for (std::size_t j = i + 1; j < fix.dim(); ++j) {
            Cochain w = wp(et, fix.vectors[i], fix.vectors[j]);
            Vec coords;
            try {
                coords = c1.coords(w);
            } catch (const InvariantViolation&) {
                throw InternalError("wp image is not an equivariant 1-cochain");
            }
            cols.push_back(std::move(coords));
        }
    return image_basis(Matrix::from_columns(c1.dim(), cols));
}

} // namespace

CohomologySummary cohomology(const EmbeddingTensor& et, std::size_t degree,
                             std::size_t capacity) {
    if (degree < 1) throw PreconditionError("cohomology degree must be at least 1");
    CochainSpace space = cochain_space(et, degree, capacity);
    Matrix delta = coboundary_matrix(et, degree, capacity);
    SubspaceBasis cocycles = kernel_basis(delta);

    CohomologySummary summary;
    summary.degree = degree;
    summary.dim_cochain = space.dim();
    summary.dim_cocycle = cocycles.dim();

    SubspaceBasis coboundaries;
    if (degree == 1) {
        coboundaries = degree1_coboundary_space(et, space, summary.non_regular);
    } else {
        coboundaries = image_basis(coboundary_matrix(et, degree - 1, capacity));
    }
    summary.dim_coboundary = coboundaries.dim();
    summary.dim_h = quotient_dim(cocycles, coboundaries);
    return summary;
}

bool same_class(const EmbeddingTensor& et, const Matrix& f, const Matrix& g,
                std::size_t capacity) {
    CochainSpace c1 = cochain_space(et, 1, capacity);
    Vec cf, cg;
    try {
        cf = c1.coords(Cochain::from_matrix(f));
        cg = c1.coords(Cochain::from_matrix(g));
    } catch (const InvariantViolation&) {
        throw PreconditionError("same_class requires equivariant 1-cochains");
    }
    Matrix delta = coboundary_matrix(et, 1, capacity);
    if (!is_zero(delta.apply(cf)) || !is_zero(delta.apply(cg)))
        throw PreconditionError("same_class requires 1-cocycles");
    bool non_regular = false;
    SubspaceBasis b1 = degree1_coboundary_space(et, c1, non_regular);
    Vec diff(cf.size());
    for (std::size_t i = 0; i < cf.size(); ++i) diff[i] = cf[i] - cg[i];
    return membership(diff, b1).has_value();
}

} // namespace homtensor
