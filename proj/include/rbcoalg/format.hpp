/**
 * @file format.hpp
 * @brief The JSON interchange format for structures: versioned, strict, and
 *        exact (all scalars are "num/den" strings).
 *
 * Every file carries "format": 1, a "kind", the dimension, basis names, and
 * the structure constants as sparse entries [a, b, c, "num/den"]:
 *
 *   - coalgebra kinds ("delta"):  Δ(e_a) += s · e_b ⊗ e_c
 *   - algebra kinds ("mult"):     e_a · e_b += s · e_c
 *
 * Vectors (counit/unit) are dense string arrays, matrices (operators,
 * antipode) dense row-major string grids. Unknown fields are rejected.
 */
#pragma once

#include "rbcoalg/duality.hpp"
#include "rbcoalg/hopf.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace rbcoalg {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Kind { Coalgebra, Algebra, Hopf, RBCoalgebra, RBAlgebra };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& name);

struct SubspacesField {
    std::vector<Vec> c1;
    std::vector<Vec> c2;

    bool operator==(const SubspacesField&) const = default;
};

struct StructureFile {
    Kind kind = Kind::Coalgebra;
    int dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Tensor2> delta;                    // coalgebra / rb-coalgebra / hopf
    std::optional<Vec> counit;
    MultTable mult;                                // algebra / rb-algebra / hopf
    std::optional<Vec> unit;
    std::optional<Matrix> antipode;                // hopf
    std::map<std::string, Matrix> operators;       // rb kinds
    std::optional<Rational> weight;                // rb kinds
    std::optional<std::vector<int>> degrees;       // algebra kinds, optional grading
    std::optional<SubspacesField> subspaces;       // rb-coalgebra, emitted by split

    bool operator==(const StructureFile&) const = default;
};

/// Strict parse; throws FormatError on any malformed or unknown content.
StructureFile parse_structure(const std::string& json_text);

/// Deterministic serialization (fixed key order, sorted sparse entries);
/// parse(serialize(s)) == s exactly.
std::string serialize_structure(const StructureFile& sf);

Coalgebra to_coalgebra(const StructureFile& sf);
RBCoalgebra to_rb_coalgebra(const StructureFile& sf, const std::string& op_name = "P");
Algebra to_algebra(const StructureFile& sf);
RBAlgebra to_rb_algebra(const StructureFile& sf, const std::string& op_name = "P");
HopfAlgebra to_hopf(const StructureFile& sf);

StructureFile from_coalgebra(const Coalgebra& c);
StructureFile from_rb_coalgebra(const RBCoalgebra& rb, const std::string& op_name = "P");
StructureFile from_algebra(const Algebra& a);
StructureFile from_rb_algebra(const RBAlgebra& rb, const std::string& op_name = "P");
StructureFile from_hopf(const HopfAlgebra& h);

}  // namespace rbcoalg
