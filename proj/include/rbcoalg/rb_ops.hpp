/**
 * @file rb_ops.hpp
 * @brief The Rota-Baxter coalgebra identity and the constructions derived
 *        from it: weight rescaling, complement operator, double coproduct,
 *        counitization, the operator-image coideal with its quotient, and
 *        the idempotent splitting equivalence.
 *
 * A Rota-Baxter coalgebra of weight λ is a coalgebra (C,Δ) with an operator
 * P satisfying
 *
 *     (P⊗P)∘Δ = (id⊗P)∘Δ∘P + (P⊗id)∘Δ∘P + λ·Δ∘P.
 */
#pragma once

#include "rbcoalg/coalgebra.hpp"

#include <optional>

namespace rbcoalg {

struct RBCoalgebra {
    Coalgebra coalgebra;
    LinearOperator op;
    Rational weight;

    bool operator==(const RBCoalgebra&) const = default;
};

/// Direct sum decomposition C = C₁ ⊕ C₂ into noncounitary coideals.
struct SplitDecomposition {
    Subspace c1;
    Subspace c2;
};

struct ImageCoidealResult {
    Subspace image;        // P(C)
    Report coideal;        // Δ(P(C)) ⊂ C⊗P(C) + P(C)⊗C
    std::optional<bool> in_counit_kernel;  // P(C) ⊂ ker ε, when ε exists
};

/// Checks the weight-λ Rota-Baxter identity on every basis element.
Report check_rb_axiom(const Coalgebra& c, const LinearOperator& p, const Rational& weight);

/// Checks Δ(J) ⊂ C⊗J + J⊗C row by row; J given as a subspace of C.
Report check_coideal(const Coalgebra& c, const Subspace& j);

/// P_g(c) = ε(c)·g for a group-like g; an idempotent operator of weight −1.
RBCoalgebra grouplike_projector(const Coalgebra& c, const Vec& g);

/// (C,Δ,(μ/λ)P) has weight μ; requires λ ≠ 0.
RBCoalgebra rescale_weight(const RBCoalgebra& rb, const Rational& mu);

/// The complement operator −λ·id − P, again of weight λ.
RBCoalgebra complement_operator(const RBCoalgebra& rb);

/// Δ_P = (P⊗id)Δ + (id⊗P)Δ + λΔ with the same operator and weight; the
/// result is noncounitary.
RBCoalgebra double_coproduct(const RBCoalgebra& rb);

/// Adjoins a group-like 𝟏 (index 0) to an idempotent noncounitary
/// Rota-Baxter coalgebra of weight −1, with Δ̃(x) = Δ(x) + 𝟏⊗x + x⊗𝟏,
/// ε the projection onto 𝟏 and P̃(𝟏) = 𝟏.
RBCoalgebra counitize(const Coalgebra& c, const LinearOperator& p);

/// P(C) as a subspace, with its coideal verification and the ker-ε side
/// condition; requires weight ≠ 0.
ImageCoidealResult image_coideal(const RBCoalgebra& rb);

/// The induced Rota-Baxter structure on C/P(C); the quotient basis is the
/// set of non-pivot coordinates of the image subspace. The counit survives
/// only when P(C) ⊂ ker ε. Requires weight ≠ 0.
RBCoalgebra quotient_by_image(const RBCoalgebra& rb);

/// C₁ = im P, C₂ = im(id−P) for an idempotent operator of weight −1;
/// verifies the direct sum and both coideal conditions.
SplitDecomposition split_idempotent(const RBCoalgebra& rb);

/// The converse: the projection onto c1 along c2 is an idempotent
/// Rota-Baxter operator of weight −1 when both summands are noncounitary
/// coideals (checked; the failing subspace is named in the error).
RBCoalgebra projector_from_split(const Coalgebra& c, const Subspace& c1, const Subspace& c2);

}  // namespace rbcoalg
