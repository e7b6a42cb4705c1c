/**
 * @file hopf.hpp
 * @brief Finite-dimensional Hopf algebras by structure constants, their
 *        axiom checker, and the smash coproduct on H⊗H with its two
 *        canonical Rota-Baxter operators.
 *
 * The smash coproduct comes from the comodule-coalgebra structure
 * δ(h) = Σ h₍₁₎S(h₍₃₎)⊗h₍₂₎ and reads
 *
 *   Δ_s(a⊗b) = Σ a₍₁₎ ⊗ a₍₂₎S(a₍₄₎)b₍₁₎ ⊗ a₍₃₎ ⊗ b₍₂₎,
 *   ε_s(a⊗b) = ε(a)ε(b).
 *
 * All iterated-coproduct expressions are evaluated through one generic
 * tensor-slot machine (apply_delta_slot / multiply_slots / permute_slots),
 * never by per-formula index juggling.
 */
#pragma once

#include "rbcoalg/coalgebra.hpp"
#include "rbcoalg/rb_ops.hpp"

namespace rbcoalg {

struct HopfAlgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    MultTable mult;
    Vec unit;
    std::vector<Tensor2> delta;
    Vec counit;
    Matrix antipode;

    /// The underlying counital coalgebra (Δ, ε).
    Coalgebra coalgebra() const;

    bool operator==(const HopfAlgebra&) const = default;
};

/// Associativity/unit, coassociativity/counit, bialgebra compatibility and
/// the antipode law, on all basis tuples; the failing law is named in the
/// counterexample detail.
Report check_hopf_axioms(const HopfAlgebra& h);

/// Group algebra K[Z_n]: Δ(g^k) = g^k⊗g^k, ε ≡ 1, S(g^k) = g^(−k). n ≥ 1.
HopfAlgebra group_algebra(int n);

/// The 4-dimensional Hopf algebra with basis {1, g, x, gx}, g² = 1, x² = 0,
/// xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(x) = −gx.
HopfAlgebra sweedler_h4();

/// The smash coproduct coalgebra on H⊗H (dimension dim²); basis pair (a,b)
/// is flattened to index a·dim + b. Throws on invalid Hopf input.
Coalgebra smash_coalgebra(const HopfAlgebra& h);

/// P₁(a⊗b) = a ⊗ ε(b)1_H on H⊗H.
LinearOperator smash_p1(const HopfAlgebra& h);

/// P₂(a⊗b) = Σ S(a₍₂₎S(a₍₄₎)b₍₂₎)a₍₃₎ ⊗ S(a₍₁₎S(a₍₅₎)b₍₁₎)b₍₃₎, expanded
/// through Δ⁽⁵⁾ on the first factor and Δ⁽³⁾ on the second.
LinearOperator smash_p2(const HopfAlgebra& h);

/// Diagonal module action h.(a⊗b) = Σ h₍₁₎a ⊗ h₍₂₎b, extended linearly.
Tensor2 diagonal_action(const HopfAlgebra& h, const Vec& hv, const Tensor2& t);

/// Diagonal action on a rank-k tensor via Δ⁽ᵏ⁾(h).
NTensor diagonal_action_n(const HopfAlgebra& h, const Vec& hv, const NTensor& t);

}  // namespace rbcoalg
