#include "rbcoalg/coalgebra.hpp"

#include "rbcoalg/binomial.hpp"
#include "rbcoalg/hopf.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rbcoalg;
using namespace rbcoalg::testing;

TEST_CASE("apply_delta on the binomial coalgebra") {
    const BinomialCoalgebra b = build_binomial(3);
    const Coalgebra& c = b.underlying;

    // Δ(c0) = c0⊗c0
    Tensor2 expect0(4);
    expect0.at(0, 0) = 1;
    CHECK(apply_delta(c, unit_vec(4, 0)) == expect0);

    // Δ(c1) = c1⊗c0 + c0⊗c1 − c1⊗c1
    Tensor2 expect1(4);
    expect1.at(1, 0) = 1;
    expect1.at(0, 1) = 1;
    expect1.at(1, 1) = -1;
    CHECK(apply_delta(c, unit_vec(4, 1)) == expect1);
}

TEST_CASE("apply_delta on a group-like basis") {
    const Coalgebra z2 = group_algebra(2).coalgebra();
    Tensor2 gg(2);
    gg.at(1, 1) = 1;
    CHECK(apply_delta(z2, unit_vec(2, 1)) == gg);
}

TEST_CASE("apply_delta is linear") {
    const Coalgebra c = build_binomial(4).underlying;
    std::mt19937 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const Vec u = random_vec(rng, c.dim);
        const Vec v = random_vec(rng, c.dim);
        const Rational alpha = random_rational(rng);
        const Rational beta = random_rational(rng);
        const Tensor2 lhs = apply_delta(c, vec_add(vec_scale(alpha, u), vec_scale(beta, v)));
        const Tensor2 rhs = tensor2_add(tensor2_scale(alpha, apply_delta(c, u)),
                                        tensor2_scale(beta, apply_delta(c, v)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("coassociativity holds on the examples and fails under mutation") {
    CHECK(check_coassociativity(build_binomial(5).underlying).pass);
    CHECK(check_coassociativity(group_algebra(2).coalgebra()).pass);

    Coalgebra broken = build_binomial(5).underlying;
    broken.delta[3].at(2, 1) += 1;
    const Report r = check_coassociativity(broken);
    CHECK(!r.pass);
    REQUIRE(r.counterexample.has_value());
    // the reported index is the first one a direct rescan finds
    int first_bad = -1;
    for (int k = 0; k < broken.dim && first_bad < 0; ++k) {
        Coalgebra probe = broken;
        // evaluate (Δ⊗id)Δ and (id⊗Δ)Δ on e_k through the slot machinery
        const NTensor left = apply_delta_slot(
            apply_delta_slot(ntensor_from_vec(unit_vec(probe.dim, k)), 0, probe.delta), 0,
            probe.delta);
        const NTensor right = apply_delta_slot(
            apply_delta_slot(ntensor_from_vec(unit_vec(probe.dim, k)), 0, probe.delta), 1,
            probe.delta);
        if (!(left == right)) first_bad = k;
    }
    CHECK(r.counterexample->basis == std::vector<int>{first_bad});
}

TEST_CASE("counit law passes and mutations are caught") {
    const Coalgebra c = build_binomial(5).underlying;
    CHECK(check_counit(c).pass);
    CHECK(check_counit(group_algebra(3).coalgebra()).pass);

    Coalgebra broken = c;
    (*broken.counit)[1] = 1;  // ε(c1) := 1
    CHECK(!check_counit(broken).pass);

    Coalgebra bare = c;
    bare.counit.reset();
    CHECK_THROWS_AS(check_counit(bare), std::invalid_argument);
}

TEST_CASE("iterated_delta base cases") {
    const Coalgebra c = build_binomial(3).underlying;
    const Vec v = unit_vec(4, 2);
    const NTensor k1 = iterated_delta(c, v, 1);
    CHECK(k1.rank == 1);
    CHECK(k1.a == v);

    const Coalgebra z3 = group_algebra(3).coalgebra();
    const NTensor k4 = iterated_delta(z3, unit_vec(3, 1), 4);
    CHECK(k4.rank == 4);
    for (std::size_t flat = 0; flat < k4.a.size(); ++flat) {
        // only g⊗g⊗g⊗g is nonzero: flat index 1,1,1,1
        const bool diag = flat == (((1 * 3 + 1) * 3 + 1) * 3 + 1);
        CHECK(k4.a[flat] == (diag ? Rational(1) : Rational(0)));
    }

    CHECK_THROWS_AS(iterated_delta(c, v, 0), std::invalid_argument);
    CHECK_THROWS_AS(iterated_delta(c, unit_vec(3, 0), 2), std::invalid_argument);
}

TEST_CASE("iterated_delta is nesting-order independent on the corpus") {
    std::vector<Coalgebra> corpus = {build_binomial(4).underlying,
                                     group_algebra(2).coalgebra(),
                                     group_algebra(3).coalgebra(),
                                     sweedler_h4().coalgebra(),
                                     smash_coalgebra(group_algebra(2))};
    for (const auto& c : corpus) {
        for (int k = 2; k <= 4; ++k) {
            for (int basis = 0; basis < c.dim; ++basis) {
                const Vec v = unit_vec(c.dim, basis);
                CHECK(iterated_delta(c, v, k) == right_nested_iterated_delta(c, v, k));
            }
        }
    }
}

TEST_CASE("binomial c1 at k=3 equals the two-sided expansion") {
    const Coalgebra c = build_binomial(3).underlying;
    const Vec c1 = unit_vec(4, 1);
    CHECK(iterated_delta(c, c1, 3) == right_nested_iterated_delta(c, c1, 3));
}

TEST_CASE("check_grouplike") {
    const Coalgebra z2 = group_algebra(2).coalgebra();
    CHECK(check_grouplike(z2, unit_vec(2, 1)));
    CHECK(check_grouplike(z2, unit_vec(2, 0)));

    const Coalgebra b = build_binomial(3).underlying;
    CHECK(check_grouplike(b, unit_vec(4, 0)));
    CHECK(!check_grouplike(b, unit_vec(4, 1)));

    Coalgebra bare = b;
    bare.counit.reset();
    CHECK_THROWS_AS(check_grouplike(bare, unit_vec(4, 0)), std::invalid_argument);
}
