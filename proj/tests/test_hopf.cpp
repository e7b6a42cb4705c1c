#include "rbcoalg/hopf.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rbcoalg;

TEST_CASE("group algebras pass the axiom checker") {
    for (int n : {1, 2, 3, 5}) {
        INFO("Z", n);
        CHECK(check_hopf_axioms(group_algebra(n)).pass);
    }
    CHECK_THROWS_AS(group_algebra(0), std::invalid_argument);
}

TEST_CASE("group algebra structure") {
    const HopfAlgebra z1 = group_algebra(1);
    CHECK(z1.dim == 1);

    const HopfAlgebra z2 = group_algebra(2);
    CHECK(z2.mult.product_basis(1, 1) == unit_vec(2, 0));  // g·g = 1
    CHECK(z2.antipode.col(1) == unit_vec(2, 1));           // S(g) = g

    const HopfAlgebra z3 = group_algebra(3);
    CHECK(z3.antipode.col(1) == unit_vec(3, 2));  // S(g) = g²
    CHECK(z3.antipode.col(2) == unit_vec(3, 1));
}

TEST_CASE("zeroing the antipode breaks exactly the antipode law") {
    HopfAlgebra broken = group_algebra(2);
    broken.antipode = Matrix(2, 2);
    const Report r = check_hopf_axioms(broken);
    CHECK(!r.pass);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->detail.find("antipode") != std::string::npos);
}

TEST_CASE("the four-dimensional instance passes and has the right relations") {
    const HopfAlgebra h = sweedler_h4();
    CHECK(check_hopf_axioms(h).pass);

    const int x = 2, gx = 3;
    CHECK(is_zero_vec(h.mult.product_basis(x, x)));           // x² = 0
    CHECK(h.mult.product_basis(x, 1) == vec_scale(Rational(-1), unit_vec(4, gx)));  // xg = −gx
    CHECK(h.mult.product_basis(1, x) == unit_vec(4, gx));     // gx

    // Δ(gx) = Δ(g)Δ(x): the structure constants carry gx⊗g + 1⊗gx
    Tensor2 expect(4);
    expect.at(gx, 1) = 1;
    expect.at(0, gx) = 1;
    CHECK(h.delta[gx] == expect);
}

TEST_CASE("antipode squared is conjugation by g and has order two") {
    const HopfAlgebra h = sweedler_h4();
    const Matrix s2 = mat_mul(h.antipode, h.antipode);
    // conjugation by g: v ↦ g·v·g
    Matrix conj(4, 4);
    for (int k = 0; k < 4; ++k) {
        const Vec gv = h.mult.product(unit_vec(4, 1), unit_vec(4, k));
        const Vec gvg = h.mult.product(gv, unit_vec(4, 1));
        for (int i = 0; i < 4; ++i) conj.at(i, k) = gvg[static_cast<std::size_t>(i)];
    }
    CHECK(s2 == conj);
    CHECK(mat_mul(s2, s2) == Matrix::identity(4));  // S⁴ = id
    CHECK(!(s2 == Matrix::identity(4)));            // S² ≠ id
}

TEST_CASE("axiom checker notices a broken multiplication") {
    HopfAlgebra broken = sweedler_h4();
    broken.mult.at(1, 1, 0) = 0;  // delete g·g = 1
    CHECK(!check_hopf_axioms(broken).pass);
}
