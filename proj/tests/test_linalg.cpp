#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "homtensor/errors.hpp"
#include "homtensor/linalg.hpp"
#include "homtensor/rational.hpp"

using namespace homtensor;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("+2/4") == rat(1, 2));
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/-4"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
}

TEST_CASE("rref on the stock examples") {
    SUBCASE("identity is its own rref") {
        auto [r, pivots] = rref(Matrix::identity(2));
        CHECK(r == Matrix::identity(2));
        CHECK(pivots == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("zero matrix has no pivots") {
        auto [r, pivots] = rref(Matrix::zero(3, 3));
        CHECK(r.is_zero());
        CHECK(pivots.empty());
    }
    SUBCASE("rank-1 matrix eliminates to a single row") {
        Matrix m(2, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 2;
        m.at(1, 0) = 2;
        m.at(1, 1) = 4;
        auto [r, pivots] = rref(m);
        Matrix expected(2, 2);
        expected.at(0, 0) = 1;
        expected.at(0, 1) = 2;
        CHECK(r == expected);
        CHECK(pivots == std::vector<std::size_t>{0});
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    fixtures::RatGen gen(7001);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + gen.integer(0, 4);
        std::size_t cols = 1 + gen.integer(0, 4);
        Matrix m = gen.matrix(rows, cols);
        Matrix r = rref(m).first;
        CHECK(rref(r).first == r);
    }
}

TEST_CASE("kernel basis") {
    SUBCASE("identity has trivial kernel") {
        CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    }
    SUBCASE("zero 2x3 has full kernel") {
        CHECK(kernel_basis(Matrix::zero(2, 3)).dim() == 3);
    }
    SUBCASE("row [1,1,0] has a 2-dim kernel annihilated by the matrix") {
        Matrix m(1, 3);
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
        SubspaceBasis k = kernel_basis(m);
        REQUIRE(k.dim() == 2);
        for (const auto& v : k.vectors) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("rank-nullity on random matrices") {
    fixtures::RatGen gen(7002);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + gen.integer(0, 4);
        std::size_t cols = 1 + gen.integer(0, 4);
        Matrix m = gen.matrix(rows, cols);
        CHECK(rank(m) + kernel_basis(m).dim() == cols);
        for (const auto& v : kernel_basis(m).vectors) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("image basis") {
    CHECK(image_basis(Matrix::zero(3, 2)).dim() == 0);
    CHECK(image_basis(Matrix::identity(4)).dim() == 4);
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    SubspaceBasis im = image_basis(m);
    REQUIRE(im.dim() == 1);
    CHECK(im.vectors[0] == Vec{1, 2});
}

TEST_CASE("solve") {
    SUBCASE("identity system returns b") {
        Vec b{rat(3), rat(-1, 2)};
        CHECK(solve(Matrix::identity(2), b) == b);
    }
    SUBCASE("zero system with nonzero b is inconsistent") {
        CHECK_FALSE(solve(Matrix::zero(2, 2), Vec{1, 0}).has_value());
    }
    SUBCASE("diagonal system") {
        Matrix m = Matrix::diagonal({rat(2), rat(3)});
        auto x = solve(m, Vec{1, 1});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{rat(1, 2), rat(1, 3)});
        CHECK(m.apply(*x) == Vec{1, 1});
    }
}

TEST_CASE("consistent systems solve exactly (random)") {
    fixtures::RatGen gen(7003);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + gen.integer(0, 3);
        std::size_t cols = 1 + gen.integer(0, 3);
        Matrix m = gen.matrix(rows, cols);
        Vec x = gen.vec(cols);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("membership") {
    SUBCASE("zero vector has all-zero coordinates in any basis") {
        SubspaceBasis s;
        s.ambient_dim = 3;
        s.vectors = {Vec{1, 0, 0}, Vec{0, 1, 1}};
        auto coords = membership(zero_vec(3), s);
        REQUIRE(coords.has_value());
        CHECK(is_zero(*coords));
    }
    SUBCASE("nonzero vector is outside the empty basis") {
        SubspaceBasis s;
        s.ambient_dim = 2;
        CHECK_FALSE(membership(Vec{1, 0}, s).has_value());
    }
    SUBCASE("sum of two basis vectors reconstructs with coordinates (1,1,0)") {
        SubspaceBasis s;
        s.ambient_dim = 3;
        s.vectors = {Vec{1, 0, 0}, Vec{0, 1, 1}, Vec{0, 0, 2}};
        Vec v = add(s.vectors[0], s.vectors[1]);
        auto coords = membership(v, s);
        REQUIRE(coords.has_value());
        CHECK(*coords == Vec{1, 1, 0});
        Vec rebuilt = zero_vec(3);
        for (std::size_t i = 0; i < s.dim(); ++i) add_scaled(rebuilt, (*coords)[i], s.vectors[i]);
        CHECK(rebuilt == v);
    }
}

TEST_CASE("membership in an image agrees with solvability (random)") {
    fixtures::RatGen gen(7004);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + gen.integer(0, 3);
        std::size_t cols = 1 + gen.integer(0, 3);
        Matrix m = gen.matrix(rows, cols);
        Vec v = gen.vec(rows);
        CHECK(membership(v, image_basis(m)).has_value() == solve(m, v).has_value());
    }
}

TEST_CASE("quotient dimension") {
    SubspaceBasis z;
    z.ambient_dim = 4;
    z.vectors = {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}};
    SUBCASE("z / z = 0") { CHECK(quotient_dim(z, z) == 0); }
    SUBCASE("z / 0 = dim z") {
        SubspaceBasis empty;
        empty.ambient_dim = 4;
        CHECK(quotient_dim(z, empty) == 3);
    }
    SUBCASE("3-dim mod a contained line is 2") {
        SubspaceBasis b;
        b.ambient_dim = 4;
        b.vectors = {Vec{1, 2, 0, 0}};
        CHECK(quotient_dim(z, b) == 2);
    }
    SUBCASE("rejects a subspace that escapes the numerator") {
        SubspaceBasis b;
        b.ambient_dim = 4;
        b.vectors = {Vec{0, 0, 0, 1}};
        CHECK_THROWS_AS(quotient_dim(z, b), InternalError);
    }
}

TEST_CASE("sparse kernel matches the dense kernel") {
    fixtures::RatGen gen(7005);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + gen.integer(0, 4);
        std::size_t cols = 1 + gen.integer(0, 4);
        Matrix m = gen.matrix(rows, cols);
        std::vector<SparseRow> sparse_rows;
        for (std::size_t r = 0; r < rows; ++r) {
            SparseRow row;
            for (std::size_t c = 0; c < cols; ++c)
                if (m.at(r, c) != 0) row.emplace_back(c, m.at(r, c));
            sparse_rows.push_back(std::move(row));
        }
        SolvedKernel k = sparse_kernel(cols, sparse_rows);
        SubspaceBasis dense = kernel_basis(m);
        REQUIRE(k.dim() == dense.dim());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            Vec v = k.basis_vector(i);
            CHECK(is_zero(m.apply(v)));
            CHECK(k.reconstruct(k.coords_of(v)) == v);
        }
    }
}

TEST_CASE("matrix inverse") {
    Matrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 1) = 3;
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::zero(2, 2)).has_value());
}
