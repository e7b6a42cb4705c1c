/**
 * @file binomial.hpp
 * @brief The binomial coalgebra with its shift operator, and a brute-force
 *        combinatorial identity checker that backs its coassociativity.
 *
 * The coalgebra on c₀…c_N has
 *
 *   Δ(c_n) = Σ_{j=0}^{n} Σ_{i=n−j}^{n} (−1)^{i+j+n} C(n,j) C(j,n−i) c_i⊗c_j,
 *   ε(c₀) = 1, ε(c_{n>0}) = 0,
 *
 * and the shift P(c_n) = c_{n−1} (with c_{−1} = 0) is a Rota-Baxter
 * operator of weight −1. All binomials use the convention C(x,y) = 0 for
 * y < 0 or y > x ≥ 0, under which the inner sum may equivalently start at 0.
 */
#pragma once

#include "rbcoalg/rb_ops.hpp"

#include <array>
#include <optional>

namespace rbcoalg {

/// C(x,y) with the zero convention outside 0 ≤ y ≤ x; x must be ≥ 0.
BigInt binom(int x, int y);

struct BinomialCoalgebra {
    int max_degree = 0;       // N
    Coalgebra underlying;     // dimension N+1, counital
    LinearOperator shift;     // c_n ↦ c_{n−1}

    RBCoalgebra as_rb() const { return RBCoalgebra{underlying, shift, Rational(-1)}; }
};

BinomialCoalgebra build_binomial(int max_degree);

/// L(n,k,l,j) = Σ_{i=0}^{n} C(j,n−i)·C(i,l)·C(l,i−k); requires 0 ≤ k,l,j ≤ n.
Rational lemma_lhs(int n, int k, int l, int j);
/// R(n,k,l,j) = Σ_{i=0}^{n} C(n−j,n−i)·C(i,n−k)·C(j,i−l); same range.
Rational lemma_rhs(int n, int k, int l, int j);

struct LemmaReport {
    bool pass = true;
    long long tuples = 0;
    std::optional<std::array<int, 4>> counterexample;  // (n,k,l,j)
};

/// Verifies L = R on every tuple with n ≤ max_n and 0 ≤ k,l,j ≤ n.
LemmaReport lemma_exhaustive_check(int max_n);

/// Σ_t C(x,t)·C(y,z−t) = C(x+y,z) for x,y,z ≥ 0.
bool vandermonde_check(int x, int y, int z);

/// C(x,y) = C(x−1,y−1) + C(x−1,y) for x ≥ 1, x ≥ y ≥ 0.
bool pascal_check(int x, int y);

}  // namespace rbcoalg
