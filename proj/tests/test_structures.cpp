#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "homtensor/algebra.hpp"
#include "homtensor/errors.hpp"

using namespace homtensor;

TEST_CASE("e1 passes all three axiom verdicts") {
    CheckReport report = check_3hl(fixtures::e1());
    CHECK(report.passed());
    CHECK(report.to_string() == "PASS\n");
}

TEST_CASE("zero bracket passes with an arbitrary twist") {
    fixtures::RatGen gen(101);
    for (std::size_t dim : {1u, 2u, 3u, 4u}) {
        ThreeHomLieAlgebra algebra = ThreeHomLieAlgebra::abelian(dim, gen.matrix(dim, dim));
        CHECK(check_3hl(algebra).passed());
    }
}

TEST_CASE("twisted e1 variant is a valid algebra") {
    CHECK(check_3hl(fixtures::e1_twist()).passed());
}

TEST_CASE("non-multiplicative twist is reported on the witnessing triple") {
    std::map<std::array<std::size_t, 3>, Vec> entries;
    entries[{0, 1, 2}] = Vec{0, 0, 0, 1};
    Matrix alpha = Matrix::diagonal({rat(1), rat(1), rat(1), rat(2)});
    auto algebra = ThreeHomLieAlgebra::from_entries(4, entries, std::move(alpha));
    CheckReport report = check_3hl(algebra);
    REQUIRE_FALSE(report.passed());
    REQUIRE(report.failures.size() == 1);
    const auto& f = report.failures[0];
    CHECK(f.law == "alpha-multiplicative");
    CHECK(f.tuple == std::vector<std::size_t>{0, 1, 2});
    CHECK(f.lhs == Vec{0, 0, 0, 2}); // alpha([e1,e2,e3])
    CHECK(f.rhs == Vec{0, 0, 0, 1}); // [alpha e1, alpha e2, alpha e3]
}

TEST_CASE("bracket evaluation is alternating on random vectors") {
    fixtures::RatGen gen(102);
    ThreeHomLieAlgebra algebra = fixtures::e1();
    for (int trial = 0; trial < 25; ++trial) {
        Vec x = gen.vec(4), y = gen.vec(4), z = gen.vec(4);
        CHECK(algebra.bracket(x, y, z) == negate(algebra.bracket(y, x, z)));
        CHECK(algebra.bracket(x, y, z) == negate(algebra.bracket(x, z, y)));
        CHECK(is_zero(algebra.bracket(x, x, z)));
        CHECK(is_zero(algebra.bracket(x, y, y)));
    }
}

TEST_CASE("homomorphism checker") {
    ThreeHomLieAlgebra e1 = fixtures::e1();
    SUBCASE("identity map is an endomorphism") {
        CHECK(check_3hl_hom(Matrix::identity(4), e1, e1).passed());
    }
    SUBCASE("zero map is a homomorphism") {
        CHECK(check_3hl_hom(Matrix(4, 4), e1, e1).passed());
    }
    SUBCASE("diag(1,1,1,c) is a homomorphism exactly when c = 1") {
        for (int c = -2; c <= 2; ++c) {
            Matrix psi = Matrix::diagonal({rat(1), rat(1), rat(1), rat(c)});
            CHECK(check_3hl_hom(psi, e1, e1).passed() == (c == 1));
        }
    }
    SUBCASE("dimension mismatch throws") {
        CHECK_THROWS_AS(check_3hl_hom(Matrix(3, 3), e1, e1), DimensionError);
    }
}

TEST_CASE("fundamental bracket on the wedge square") {
    ThreeHomLieAlgebra e1 = fixtures::e1();
    HomLeibnizAlgebra wedge = fundamental_bracket(e1);
    REQUIRE(wedge.dim == 6);

    SUBCASE("abelian input gives the zero bracket") {
        ThreeHomLieAlgebra abelian = ThreeHomLieAlgebra::abelian(4, Matrix::identity(4));
        CHECK(fundamental_bracket(abelian).bracket2.is_zero());
    }
    SUBCASE("[e1^e2, e3^e4] vanishes") {
        std::size_t p12 = pair_index(0, 1, 4);
        std::size_t p34 = pair_index(2, 3, 4);
        CHECK(is_zero(wedge.bracket_basis(p12, p34)));
    }
    SUBCASE("[e1^e2, e2^e3] = e2^e4") {
        std::size_t p12 = pair_index(0, 1, 4);
        std::size_t p23 = pair_index(1, 2, 4);
        Vec expected = zero_vec(6);
        expected[pair_index(1, 3, 4)] = 1;
        CHECK(wedge.bracket_basis(p12, p23) == expected);
    }
    SUBCASE("the result is a Hom-Leibniz algebra") {
        CHECK(check_hom_leibniz(wedge).passed());
    }
    SUBCASE("twisted variant also yields a Hom-Leibniz algebra") {
        CHECK(check_hom_leibniz(fundamental_bracket(fixtures::e1_twist())).passed());
    }
    SUBCASE("invalid input is rejected") {
        std::map<std::array<std::size_t, 3>, Vec> entries;
        entries[{0, 1, 2}] = Vec{0, 0, 0, 1};
        Matrix alpha = Matrix::diagonal({rat(1), rat(1), rat(1), rat(2)});
        auto bad = ThreeHomLieAlgebra::from_entries(4, entries, std::move(alpha));
        CHECK_THROWS_AS(fundamental_bracket(bad), PreconditionError);
    }
}

TEST_CASE("hom-Leibniz checker rejects a non-Leibniz bracket") {
    HomLeibnizAlgebra algebra;
    algebra.dim = 2;
    algebra.twist = Matrix::identity(2);
    algebra.bracket2 = Tensor({2, 2, 2});
    algebra.bracket2.at({0, 1, 0}) = 1; // [e1, e2] = e1, [e2, e1] = 0
    CheckReport report = check_hom_leibniz(algebra);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.failures.empty());
    for (const auto& f : report.failures) CHECK(f.law == "hom-leibniz-identity");
}

TEST_CASE("printed-variant mode adds informational entries without changing the verdict") {
    SUBCASE("zero bracket satisfies both forms") {
        HomLeibnizAlgebra zero;
        zero.dim = 3;
        zero.twist = Matrix::identity(3);
        zero.bracket2 = Tensor({3, 3, 3});
        CheckReport strict = check_hom_leibniz(zero, true);
        CHECK(strict.passed());
        CHECK(strict.informational.empty());
    }
    SUBCASE("fundamental bracket of e1: both forms hold (double brackets vanish)") {
        HomLeibnizAlgebra wedge = fundamental_bracket(fixtures::e1());
        CheckReport strict = check_hom_leibniz(wedge, true);
        CHECK(strict.passed());
        CHECK(strict.informational.empty());
    }
    SUBCASE("2-dim nonabelian Lie algebra separates the two forms") {
        // [e1, e2] = e2 = -[e2, e1]: the standard identity is the Jacobi
        // identity, while the printed variant fails at (e1, e1, e2).
        HomLeibnizAlgebra lie;
        lie.dim = 2;
        lie.twist = Matrix::identity(2);
        lie.bracket2 = Tensor({2, 2, 2});
        lie.bracket2.at({0, 1, 1}) = 1;
        lie.bracket2.at({1, 0, 1}) = -1;
        CheckReport plain = check_hom_leibniz(lie, false);
        CheckReport strict = check_hom_leibniz(lie, true);
        CHECK(plain.passed());
        CHECK(strict.passed());
        CHECK(plain.informational.empty());
        REQUIRE_FALSE(strict.informational.empty());
        for (const auto& f : strict.informational)
            CHECK(f.law == "hom-leibniz-identity-printed-variant");
        const auto& first = strict.informational.front();
        CHECK(first.tuple == std::vector<std::size_t>{0, 0, 1});
        CHECK(first.lhs == Vec{0, 1}); // [e1, [e1, e2]]
        CHECK(first.rhs == Vec{0, 0}); // [[e1,e1], e2] + [e1, [e1,e1]]
    }
}

TEST_CASE("ternary Leibniz checker") {
    SUBCASE("any valid 3-Hom-Lie algebra expands to a 3-Hom-Leibniz algebra") {
        CHECK(check_3h_leibniz(as_leibniz(fixtures::e1())).passed());
        CHECK(check_3h_leibniz(as_leibniz(fixtures::e1_twist())).passed());
    }
    SUBCASE("zero ternary bracket passes") {
        ThreeHomLeibnizAlgebra zero;
        zero.dim = 3;
        zero.twist = Matrix::identity(3);
        zero.bracket3 = Tensor({3, 3, 3, 3});
        CHECK(check_3h_leibniz(zero).passed());
    }
    SUBCASE("random dim-3 alternating brackets expand to valid Leibniz structures") {
        fixtures::RatGen gen(103);
        for (int trial = 0; trial < 10; ++trial) {
            std::map<std::array<std::size_t, 3>, Vec> entries;
            entries[{0, 1, 2}] = gen.vec(3);
            auto algebra = ThreeHomLieAlgebra::from_entries(3, entries, Matrix::identity(3));
            REQUIRE(check_3hl(algebra).passed());
            CHECK(check_3h_leibniz(as_leibniz(algebra)).passed());
        }
    }
}

TEST_CASE("ternary Leibniz homomorphism checker") {
    ThreeHomLeibnizAlgebra e1_leibniz = as_leibniz(fixtures::e1());
    CHECK(check_3h_leibniz_hom(Matrix::identity(4), e1_leibniz, e1_leibniz).passed());
    CHECK(check_3h_leibniz_hom(Matrix(4, 4), e1_leibniz, e1_leibniz).passed());
    CHECK_THROWS_AS(check_3h_leibniz_hom(Matrix(3, 4), e1_leibniz, e1_leibniz), DimensionError);
}
