/**
 * @file duality.hpp
 * @brief Algebras by structure constants, the Rota-Baxter algebra identity,
 *        dualization of Rota-Baxter coalgebras, the double product, and the
 *        graded dual of a truncated graded Rota-Baxter algebra.
 *
 * A Rota-Baxter algebra of weight λ is an algebra (R,·) with an operator P
 * satisfying P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy).
 */
#pragma once

#include "rbcoalg/rb_ops.hpp"

#include <optional>

namespace rbcoalg {

struct Algebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    MultTable mult;
    std::optional<Vec> unit;  // absent ⇒ nonunitary

    bool unital() const { return unit.has_value(); }

    bool operator==(const Algebra&) const = default;
};

struct RBAlgebra {
    Algebra algebra;
    LinearOperator op;
    Rational weight;

    bool operator==(const RBAlgebra&) const = default;
};

/// Locally finite graded algebra truncated at max_degree: degree[i] is the
/// degree of basis element i, products overflowing the truncation are zero,
/// and the operator is degree-preserving.
struct GradedAlgebraTruncation {
    RBAlgebra rb;
    std::vector<int> degree;
    int max_degree = 0;
};

Report check_associativity(const Algebra& a);
Report check_unit(const Algebra& a);  // throws when nonunitary
Report check_rb_algebra_axiom(const Algebra& a, const LinearOperator& p, const Rational& weight);

/// Linear dual of a Rota-Baxter coalgebra: dual-basis multiplication
/// mult(i,j,k) = delta[k].at(i,j), unit = counit when present, operator the
/// transpose; a Rota-Baxter algebra of the same weight.
RBAlgebra dualize(const RBCoalgebra& rb);

/// x ⋆_P y = xP(y) + P(x)y + λxy; the result is nonunitary.
Algebra double_product(const RBAlgebra& rb);

/// t·K[t] truncated above max_degree, with P(tⁿ) = qⁿ/(1−qⁿ)·tⁿ: a
/// Rota-Baxter algebra of weight 1. Requires qⁿ ≠ 1 for 1 ≤ n ≤ max_degree.
RBAlgebra q_polynomial_truncation(const Rational& q, int max_degree);

/// Same structure with its grading (basis element i has degree i+1).
GradedAlgebraTruncation q_graded_truncation(const Rational& q, int max_degree);

/// Degreewise dual: Δ(f_k) transposes the multiplication, the operator
/// transposes, the counit is the dual of the unit when one exists. Throws
/// when the operator (or multiplication) does not respect the grading.
RBCoalgebra graded_dual(const GradedAlgebraTruncation& g);

}  // namespace rbcoalg
