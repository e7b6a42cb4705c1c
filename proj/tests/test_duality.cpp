#include "rbcoalg/duality.hpp"

#include "rbcoalg/binomial.hpp"
#include "rbcoalg/hopf.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rbcoalg;
using namespace rbcoalg::testing;

TEST_CASE("dual of a group-like coalgebra is the idempotent dual basis") {
    const Coalgebra z2 = group_algebra(2).coalgebra();
    const RBAlgebra dual = dualize(RBCoalgebra{z2, Matrix(2, 2), Rational(-1)});
    CHECK(dual.algebra.mult.product_basis(0, 0) == unit_vec(2, 0));  // e*·e* = e*
    CHECK(dual.algebra.mult.product_basis(1, 1) == unit_vec(2, 1));  // g*·g* = g*
    CHECK(is_zero_vec(dual.algebra.mult.product_basis(0, 1)));       // e*·g* = 0
    CHECK(check_associativity(dual.algebra).pass);
    CHECK(check_unit(dual.algebra).pass);  // unit = ε = e* + g*
}

TEST_CASE("dual of the binomial shift raises the index") {
    const RBAlgebra dual = dualize(build_binomial(3).as_rb());
    for (int n = 0; n < 3; ++n) CHECK(dual.op.col(n) == unit_vec(4, n + 1));
    CHECK(is_zero_vec(dual.op.col(3)));
    CHECK(check_rb_algebra_axiom(dual.algebra, dual.op, Rational(-1)).pass);
    CHECK(dual.algebra.basis_names[0] == "c0*");
}

TEST_CASE("trivial operators pass the algebra axiom") {
    const Algebra a = dualize(build_binomial(3).as_rb()).algebra;
    for (const Rational& w : {Rational(0), Rational(1), Rational(-3)}) {
        CHECK(check_rb_algebra_axiom(a, Matrix(4, 4), w).pass);
    }
    CHECK(check_rb_algebra_axiom(a, Matrix::identity(4), Rational(-1)).pass);
    CHECK_THROWS_AS(check_rb_algebra_axiom(a, Matrix(3, 3), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("every corpus dual passes the algebra axiom at the same weight") {
    for (const auto& [name, rb] : rb_coalgebra_corpus()) {
        const RBAlgebra dual = dualize(rb);
        INFO(name);
        CHECK(check_rb_algebra_axiom(dual.algebra, dual.op, dual.weight).pass);
        if (rb.coalgebra.counital()) {
            CHECK(check_unit(dual.algebra).pass);
        } else {
            CHECK(!dual.algebra.unital());
        }
    }
}

TEST_CASE("double product with the zero operator at weight 1 is the product") {
    const Algebra a = dualize(build_binomial(3).as_rb()).algebra;
    const Algebra star = double_product(RBAlgebra{a, Matrix(4, 4), Rational(1)});
    CHECK(star.mult == a.mult);
    CHECK(!star.unital());
}

TEST_CASE("double product on the dual binomial: frozen expansion") {
    const RBAlgebra dual = dualize(build_binomial(3).as_rb());
    const Algebra star = double_product(dual);
    // c0*⋆c0* = c0*·P(c0*) + P(c0*)·c0* − c0*·c0* = c0*c1* + c1*c0* − c0*
    //         = 2c1* − c0*
    Vec expect = vec_scale(Rational(2), unit_vec(4, 1));
    expect = vec_sub(expect, unit_vec(4, 0));
    CHECK(star.mult.product_basis(0, 0) == expect);
}

TEST_CASE("double product is associative and P becomes an algebra map") {
    for (const auto& [name, rb] : rb_coalgebra_corpus()) {
        const RBAlgebra dual = dualize(rb);
        const Algebra star = double_product(dual);
        INFO(name);
        CHECK(check_associativity(star).pass);
        CHECK(check_rb_algebra_axiom(star, dual.op, dual.weight).pass);
        // P(x⋆y) = P(x)·P(y) on basis pairs
        for (int i = 0; i < star.dim; ++i)
            for (int j = 0; j < star.dim; ++j) {
                const Vec lhs = mat_apply(dual.op, star.mult.product_basis(i, j));
                const Vec rhs = dual.algebra.mult.product(dual.op.col(i), dual.op.col(j));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("q truncation values at q=2") {
    const RBAlgebra rb = q_polynomial_truncation(Rational(2), 5);
    CHECK(rb.algebra.dim == 5);
    CHECK(rb.weight == 1);
    CHECK(!rb.algebra.unital());
    // P(t²) = 4/(1−4)·t² = −4/3·t²
    CHECK(rb.op.at(1, 1) == Rational(-4, 3));
    CHECK(check_rb_algebra_axiom(rb.algebra, rb.op, Rational(1)).pass);
    CHECK(check_associativity(rb.algebra).pass);

    CHECK_THROWS_AS(q_polynomial_truncation(Rational(1), 3), std::invalid_argument);
    CHECK_THROWS_AS(q_polynomial_truncation(Rational(-1), 3), std::invalid_argument);
    // q = 0 is degenerate but allowed: qⁿ = 0 ≠ 1
    CHECK(check_rb_algebra_axiom(q_polynomial_truncation(Rational(0), 4).algebra,
                                 q_polynomial_truncation(Rational(0), 4).op, Rational(1))
              .pass);
}

TEST_CASE("double product closed form on the q truncation") {
    const Rational q(2);
    const int N = 8;
    const Algebra star = double_product(q_polynomial_truncation(q, N));
    // tⁿ⋆tᵐ = (1−q^{n+m})/((1−qⁿ)(1−qᵐ)) t^{n+m}, zero past the truncation
    for (int n = 1; n <= N; ++n)
        for (int m = 1; m <= N; ++m) {
            const Vec prod = star.mult.product_basis(n - 1, m - 1);
            if (n + m > N) {
                CHECK(is_zero_vec(prod));
                continue;
            }
            const Rational coeff = (Rational(1) - rational_pow(q, n + m)) /
                                   ((Rational(1) - rational_pow(q, n)) *
                                    (Rational(1) - rational_pow(q, m)));
            CHECK(prod == vec_scale(coeff, unit_vec(N, n + m - 1)));
        }
    // the paper-level spot value: t²⋆t³ = −31/21·t⁵
    CHECK(star.mult.at(1, 2, 4) == Rational(-31, 21));
}

TEST_CASE("graded dual of the q truncation") {
    const RBCoalgebra dual = graded_dual(q_graded_truncation(Rational(2), 4));
    CHECK(!dual.coalgebra.counital());
    // Δ(f₃) = f₁⊗f₂ + f₂⊗f₁
    Tensor2 expect(4);
    expect.at(0, 1) = 1;
    expect.at(1, 0) = 1;
    CHECK(dual.coalgebra.delta[2] == expect);
    // P*(f₃) = 8/(1−8)·f₃
    CHECK(dual.op.at(2, 2) == Rational(-8, 7));
    CHECK(check_coassociativity(dual.coalgebra).pass);
    CHECK(check_rb_axiom(dual.coalgebra, dual.op, Rational(1)).pass);
}

TEST_CASE("graded dual at N=12 passes the coalgebra axiom at weight 1") {
    const RBCoalgebra dual = graded_dual(q_graded_truncation(Rational(2), 12));
    CHECK(check_coassociativity(dual.coalgebra).pass);
    CHECK(check_rb_axiom(dual.coalgebra, dual.op, Rational(1)).pass);
}

TEST_CASE("graded dual commutes with truncation") {
    const RBCoalgebra big = graded_dual(q_graded_truncation(Rational(2), 8));
    const RBCoalgebra small = graded_dual(q_graded_truncation(Rational(2), 4));
    for (int k = 0; k < 4; ++k) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(big.coalgebra.delta[static_cast<std::size_t>(k)].at(i, j) ==
                      small.coalgebra.delta[static_cast<std::size_t>(k)].at(i, j));
            }
        for (int i = 0; i < 4; ++i) CHECK(big.op.at(i, k) == small.op.at(i, k));
    }
}

TEST_CASE("graded dual rejects a grading violation") {
    GradedAlgebraTruncation g = q_graded_truncation(Rational(2), 4);
    g.rb.op.at(0, 2) = 1;  // degree 1 ← degree 3
    CHECK_THROWS_WITH_AS(graded_dual(g), "graded_dual: grading not preserved by operator",
                         std::invalid_argument);
    GradedAlgebraTruncation g2 = q_graded_truncation(Rational(2), 4);
    g2.degree[3] = 7;
    CHECK_THROWS_AS(graded_dual(g2), std::invalid_argument);
}

TEST_CASE("dualizing the double coproduct is the double product of the dual") {
    for (const auto& [name, rb] : rb_coalgebra_corpus()) {
        const Algebra lhs = dualize(double_coproduct(rb)).algebra;
        const Algebra rhs = double_product(dualize(rb));
        INFO(name);
        CHECK(lhs.mult == rhs.mult);
    }
}
