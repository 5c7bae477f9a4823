#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "homtensor/errors.hpp"
#include "homtensor/representation.hpp"

using namespace homtensor;

namespace {

// Valid candidates for the randomized equivalence test: the zero action
// admits any carrier twist.
Representation random_zero_rep(const ThreeHomLieAlgebra& algebra, std::size_t vdim,
                               fixtures::RatGen& gen) {
    return Representation::zero(algebra, vdim, gen.matrix(vdim, vdim));
}

ThreeHomLieAlgebra random_small_algebra(fixtures::RatGen& gen) {
    std::size_t dim = 1 + gen.integer(0, 2);
    if (dim < 3 || gen.integer(0, 1) == 0)
        return ThreeHomLieAlgebra::abelian(dim, gen.matrix(dim, dim));
    // Every alternating bracket on a 3-dim space satisfies the Filippov
    // identity (Sylvester exchange), so a random value vector is valid.
    std::map<std::array<std::size_t, 3>, Vec> entries;
    entries[{0, 1, 2}] = gen.vec(3);
    return ThreeHomLieAlgebra::from_entries(3, entries, Matrix::identity(3));
}

} // namespace

TEST_CASE("zero action is a representation for any carrier twist") {
    fixtures::RatGen gen(201);
    for (int trial = 0; trial < 5; ++trial) {
        Representation rep = random_zero_rep(fixtures::e1(), 3, gen);
        CHECK(check_representation(rep).passed());
    }
}

TEST_CASE("adjoint representation of e1") {
    Representation ad = adjoint_representation(fixtures::e1());
    CHECK(check_representation(ad).passed());

    SUBCASE("rho(e1,e2) sends e3 to e4 and kills the rest") {
        Matrix m = ad.rho_basis(0, 1);
        Matrix expected(4, 4);
        expected.at(3, 2) = 1;
        CHECK(m == expected);
    }
    SUBCASE("rho(e3,e4) vanishes") { CHECK(ad.rho_basis(2, 3).is_zero()); }
    SUBCASE("abelian algebra has zero adjoint action") {
        ThreeHomLieAlgebra abelian = ThreeHomLieAlgebra::abelian(3, Matrix::identity(3));
        CHECK(adjoint_representation(abelian).rho.is_zero());
    }
}

TEST_CASE("twisted adjoint fails the equivariance law on the expected tuple") {
    Representation ad = adjoint_representation(fixtures::e1());
    Representation bad(ad.algebra, 4, ad.rho, Matrix::diagonal({rat(1), rat(1), rat(1), rat(2)}));
    CheckReport report = check_representation(bad);
    REQUIRE_FALSE(report.passed());
    const auto& f = report.failures.front();
    CHECK(f.law == "rho-twist-equivariance");
    CHECK(f.tuple == std::vector<std::size_t>{0, 1, 2});
    CHECK(f.lhs == Vec{0, 0, 0, 1}); // rho(alpha e1, alpha e2) beta e3
    CHECK(f.rhs == Vec{0, 0, 0, 2}); // beta rho(e1, e2) e3
}

TEST_CASE("pair action is alternating on random vectors") {
    fixtures::RatGen gen(202);
    Representation ad = adjoint_representation(fixtures::e1());
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = gen.vec(4), y = gen.vec(4);
        CHECK(ad.rho_vec(x, y) == Rat(-1) * ad.rho_vec(y, x));
        CHECK(ad.rho_vec(x, x).is_zero());
    }
}

TEST_CASE("direct sum representation") {
    ThreeHomLieAlgebra e1 = fixtures::e1();
    SUBCASE("n = 1 coincides with the adjoint") {
        Representation sum1 = direct_sum_representation(e1, 1);
        Representation ad = adjoint_representation(e1);
        CHECK(sum1.rho == ad.rho);
        CHECK(sum1.beta == ad.beta);
    }
    SUBCASE("n = 2 is block diagonal and valid") {
        Representation sum2 = direct_sum_representation(e1, 2);
        CHECK(sum2.vdim == 8);
        CHECK(check_representation(sum2).passed());
        Matrix block = adjoint_representation(e1).rho_basis(0, 1);
        Matrix big = sum2.rho_basis(0, 1);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(big.at(r, c) == block.at(r, c));
                CHECK(big.at(4 + r, 4 + c) == block.at(r, c));
                CHECK(big.at(r, 4 + c) == 0);
                CHECK(big.at(4 + r, c) == 0);
            }
    }
    SUBCASE("abelian algebra gives the zero action") {
        ThreeHomLieAlgebra abelian = ThreeHomLieAlgebra::abelian(2, Matrix::identity(2));
        CHECK(direct_sum_representation(abelian, 3).rho.is_zero());
    }
    SUBCASE("n = 0 is rejected") {
        CHECK_THROWS_AS(direct_sum_representation(e1, 0), PreconditionError);
    }
}

TEST_CASE("hemisemidirect product structure") {
    Representation ad = adjoint_representation(fixtures::e1());
    ThreeHomLeibnizAlgebra product = hemisemidirect_product(ad);
    REQUIRE(product.dim == 8);

    SUBCASE("bracket lands as [x,y,z] + rho(x,y)w") {
        // [e1 + 0, e2 + 0, 0 + e3] = rho(e1,e2) e3 = e4 in the V summand
        Vec value = product.bracket_basis(0, 1, 4 + 2);
        Vec expected = zero_vec(8);
        expected[4 + 3] = 1;
        CHECK(value == expected);
        // [e1, e2, e3] = e4 in the L summand
        Vec lpart = product.bracket_basis(0, 1, 2);
        Vec lexpected = zero_vec(8);
        lexpected[3] = 1;
        CHECK(lpart == lexpected);
    }
    SUBCASE("product of a representation is a 3-Hom-Leibniz algebra") {
        CHECK(check_3h_leibniz(product).passed());
    }
    SUBCASE("abelian adjoint gives the zero product bracket") {
        ThreeHomLieAlgebra abelian = ThreeHomLieAlgebra::abelian(2, Matrix::identity(2));
        Representation ad0 = adjoint_representation(abelian);
        CHECK(hemisemidirect_product(ad0).bracket3.is_zero());
    }
    SUBCASE("perturbed action fails the product check") {
        Representation bad = ad;
        bad.rho.at({pair_index(0, 1, 4), 0, 0}) = 1;
        CHECK_FALSE(check_representation(bad).passed());
        CHECK_FALSE(check_3h_leibniz(hemisemidirect_product(bad)).passed());
    }
}

TEST_CASE("representation laws match the product criterion on random candidates") {
    // Desk-scale version of the equivalence suite (the acceptance binary
    // runs the full randomized version).
    fixtures::RatGen gen(203);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        ThreeHomLieAlgebra algebra = random_small_algebra(gen);
        Representation rep = [&] {
            switch (gen.integer(0, 2)) {
            case 0: return adjoint_representation(algebra);
            case 1: return direct_sum_representation(algebra, 2);
            default: return random_zero_rep(algebra, 1 + gen.integer(0, 2), gen);
            }
        }();
        if (trial % 2 == 0) {
            // Mutate one action entry or the twist.
            if (rep.rho.size() > 0 && gen.integer(0, 1) == 0) {
                std::size_t idx = gen.integer(0, static_cast<int>(rep.rho.size()) - 1);
                rep.rho.flat(idx) += gen.small_nonzero();
            } else {
                rep.beta.at(gen.integer(0, static_cast<int>(rep.vdim) - 1),
                            gen.integer(0, static_cast<int>(rep.vdim) - 1)) +=
                    gen.small_nonzero();
            }
        }
        bool direct = check_representation(rep).passed();
        bool via_product = check_3h_leibniz(hemisemidirect_product(rep)).passed();
        CHECK(direct == via_product);
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("Leibniz representation checker") {
    ThreeHomLeibnizAlgebra e1_leibniz = as_leibniz(fixtures::e1());
    SUBCASE("zero actions always pass") {
        LeibnizRepresentation zero =
            LeibnizRepresentation::zero(e1_leibniz, 3, Matrix::identity(3));
        CHECK(check_leibniz_representation(zero).passed());
    }
    SUBCASE("zero actions with a non-multiplicative pairing still pass") {
        fixtures::RatGen gen(204);
        LeibnizRepresentation zero =
            LeibnizRepresentation::zero(e1_leibniz, 2, gen.matrix(2, 2));
        CHECK(check_leibniz_representation(zero).passed());
    }
}
