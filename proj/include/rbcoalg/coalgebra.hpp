/**
 * @file coalgebra.hpp
 * @brief Finite-dimensional coalgebras by structure constants and the
 *        fundamental law checks.
 *
 * A coalgebra is given by its comultiplication structure constants
 * Δ(e_k) = Σ_{i,j} delta[k].at(i,j) e_i⊗e_j and an optional counit vector;
 * an absent counit means the coalgebra is noncounitary. Linear operators act
 * by their matrix, e_k ↦ Σ_i at(i,k) e_i.
 */
#pragma once

#include "rbcoalg/linalg.hpp"
#include "rbcoalg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbcoalg {

using LinearOperator = Matrix;

struct Coalgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Tensor2> delta;  // delta[k] = Δ(e_k)
    std::optional<Vec> counit;

    bool counital() const { return counit.has_value(); }

    bool operator==(const Coalgebra&) const = default;
};

/// Default basis names e0, e1, ...
std::vector<std::string> default_names(int dim, const std::string& stem = "e");

/// Linear extension of Δ to an arbitrary vector.
Tensor2 apply_delta(const Coalgebra& c, const Vec& v);

/// Counit evaluated on a vector; requires a counital coalgebra.
Rational apply_counit(const Coalgebra& c, const Vec& v);

/// (Δ⊗id)Δ = (id⊗Δ)Δ on every basis element; fails with the first basis
/// index and both rank-3 values.
Report check_coassociativity(const Coalgebra& c);

/// (ε⊗id)Δ = id = (id⊗ε)Δ; throws std::invalid_argument when noncounitary.
Report check_counit(const Coalgebra& c);

/// Unique k-fold comultiplication Δ⁽ᵏ⁾(v), computed by left-nesting.
/// k = 1 returns v itself.
NTensor iterated_delta(const Coalgebra& c, const Vec& v, int k);

/// Δ(v) = v⊗v and ε(v) = 1; throws when the coalgebra is noncounitary.
bool check_grouplike(const Coalgebra& c, const Vec& v);

}  // namespace rbcoalg
