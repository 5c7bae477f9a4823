#pragma once

// Shared desk-scale fixtures for the test suites.
//
//  e1        dim-4 algebra with [e1,e2,e3] = e4, identity twist
//  e1_twist  the same bracket with alpha = diag(2, 3, 1/6, 1)
//  zero23    dim-2 abelian algebra, identity twist, zero action on a 3-dim V
//  abel_wp   dim-3 abelian algebra acting on a 2-dim V through the pair
//            (e2, e3) only, with T embedding V as span(e1, e2); the one
//            fixture whose degree-1 coboundary space is nonzero

#include "homtensor/algebra.hpp"
#include "homtensor/embedding.hpp"
#include "homtensor/representation.hpp"

#include <random>

namespace fixtures {

using namespace homtensor;

inline ThreeHomLieAlgebra e1() {
    std::map<std::array<std::size_t, 3>, Vec> entries;
    entries[{0, 1, 2}] = Vec{0, 0, 0, 1};
    return ThreeHomLieAlgebra::from_entries(4, entries, Matrix::identity(4));
}

inline ThreeHomLieAlgebra e1_twist() {
    std::map<std::array<std::size_t, 3>, Vec> entries;
    entries[{0, 1, 2}] = Vec{0, 0, 0, 1};
    Matrix alpha = Matrix::diagonal({rat(2), rat(3), rat(1, 6), rat(1)});
    return ThreeHomLieAlgebra::from_entries(4, entries, std::move(alpha));
}

inline Matrix e1_derivation() {
    // d(e1) = e4, all other basis vectors to zero; a square-zero derivation.
    Matrix d(4, 4);
    d.at(3, 0) = 1;
    return d;
}

inline EmbeddingTensor e1_identity() { return identity_tensor(e1()); }
inline EmbeddingTensor e1_d() { return derivation_tensor(e1(), e1_derivation()); }
inline EmbeddingTensor e1_twist_identity() { return identity_tensor(e1_twist()); }

inline EmbeddingTensor zero23() {
    ThreeHomLieAlgebra algebra = ThreeHomLieAlgebra::abelian(2, Matrix::identity(2));
    Representation rep = Representation::zero(algebra, 3, Matrix::identity(3));
    return EmbeddingTensor::create(std::move(rep), Matrix(2, 3));
}

inline Representation abel_wp_rep() {
    ThreeHomLieAlgebra algebra = ThreeHomLieAlgebra::abelian(3, Matrix::identity(3));
    Tensor rho({pair_count(3), 2, 2});
    std::size_t p23 = pair_index(1, 2, 3);
    rho.at({p23, 0, 0}) = 1;
    rho.at({p23, 1, 1}) = 1;
    return Representation(std::move(algebra), 2, std::move(rho), Matrix::identity(2));
}

inline Matrix abel_wp_t() {
    Matrix t(3, 2);
    t.at(0, 0) = 1;
    t.at(1, 1) = 1;
    return t;
}

inline EmbeddingTensor abel_wp() { return EmbeddingTensor::create(abel_wp_rep(), abel_wp_t()); }

// Deterministic small-rational generator for randomized suites.
class RatGen {
public:
    explicit RatGen(unsigned seed) : rng_(seed) {}

    Rat small() {
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 3);
        return rat(num(rng_), den(rng_));
    }
    Rat small_nonzero() {
        Rat r = small();
        while (r == 0) r = small();
        return r;
    }
    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }
    Vec vec(std::size_t n) {
        Vec v(n);
        for (auto& x : v) x = small();
        return v;
    }
    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small();
        return m;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace fixtures
