/**
 * @file linalg.hpp
 * @brief Dense exact-rational vectors, matrices, tensors and subspaces.
 *
 * Target dimensions are small (≤ 64), so everything is dense. All values are
 * immutable after construction as far as the library is concerned; every
 * operation returns a fresh value.
 */
#pragma once

#include "rbcoalg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbcoalg {

using Vec = std::vector<Rational>;

Vec zero_vec(int n);
Vec unit_vec(int n, int k);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

/// Dense row-major matrix. A linear operator acts by e_k ↦ Σ_i at(i,k)·e_i,
/// i.e. columns are images of basis vectors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;  // rows*cols entries

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rs);

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Rational& s, const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_apply(const Matrix& m, const Vec& v);
bool is_zero_matrix(const Matrix& m);

/// Element of C⊗C over a dim-dimensional space: at(i,j) is the coefficient
/// of e_i⊗e_j.
struct Tensor2 {
    int dim = 0;
    std::vector<Rational> a;

    Tensor2() = default;
    explicit Tensor2(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {}

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    bool operator==(const Tensor2&) const = default;
};

/// Element of C⊗C⊗C.
struct Tensor3 {
    int dim = 0;
    std::vector<Rational> a;

    Tensor3() = default;
    explicit Tensor3(int d) : dim(d), a(static_cast<std::size_t>(d) * d * d) {}

    Rational& at(int i, int j, int k) {
        return a[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Rational& at(int i, int j, int k) const {
        return a[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    bool operator==(const Tensor3&) const = default;
};

Tensor2 tensor2_add(const Tensor2& x, const Tensor2& y);
Tensor2 tensor2_sub(const Tensor2& x, const Tensor2& y);
Tensor2 tensor2_scale(const Rational& s, const Tensor2& x);
Tensor2 outer_product(const Vec& u, const Vec& v);
bool is_zero_tensor2(const Tensor2& t);

/// Element of C^{⊗rank} with all slots of the same dimension; slot 0 varies
/// slowest in the flat layout.
struct NTensor {
    int dim = 0;
    int rank = 0;
    std::vector<Rational> a;

    NTensor() = default;
    NTensor(int d, int r);

    std::size_t size() const { return a.size(); }

    bool operator==(const NTensor&) const = default;
};

NTensor ntensor_from_vec(const Vec& v);
NTensor ntensor_from_tensor2(const Tensor2& t);
Tensor2 ntensor_to_tensor2(const NTensor& t);
Tensor3 ntensor_to_tensor3(const NTensor& t);
NTensor ntensor_outer(const NTensor& x, const NTensor& y);

/// Replaces slot `slot` by its image under the matrix m (same dimension).
NTensor apply_matrix_slot(const NTensor& t, int slot, const Matrix& m);

/// Splits slot `slot` in two using comultiplication structure constants
/// (delta[c] = Δ(e_c) as a Tensor2); rank grows by one.
NTensor apply_delta_slot(const NTensor& t, int slot, const std::vector<Tensor2>& delta);

/// Rank-3 multiplication structure constants: e_i·e_j = Σ_k at(i,j,k)·e_k.
struct MultTable {
    int dim = 0;
    std::vector<Rational> c;

    MultTable() = default;
    explicit MultTable(int d) : dim(d), c(static_cast<std::size_t>(d) * d * d) {}

    Rational& at(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Rational& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    Vec product(const Vec& u, const Vec& v) const;
    Vec product_basis(int i, int j) const;

    bool operator==(const MultTable&) const = default;
};

/// Contracts adjacent slots (slot, slot+1) into their product; rank drops by one.
NTensor multiply_slots(const NTensor& t, int slot, const MultTable& mult);

/// Reorders slots: result slot d holds what source slot src_of_dst[d] held.
NTensor permute_slots(const NTensor& t, const std::vector<int>& src_of_dst);

/// Canonical reduced row-echelon form (unique; row space preserved).
Matrix rref(const Matrix& m);
/// RREF together with the pivot column of each nonzero row.
std::pair<Matrix, std::vector<int>> rref_with_pivots(const Matrix& m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of K^ambient in canonical form: basis rows are the nonzero rows
/// of a reduced row-echelon matrix, so equality of subspaces is equality of
/// representations.
class Subspace {
public:
    explicit Subspace(int ambient_dim);  // zero subspace
    static Subspace span(int ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(int ambient_dim);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v modulo the subspace: zero exactly on members.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;

    /// Coefficients expressing v in the canonical basis rows, if v belongs.
    std::optional<Vec> solve_membership(const Vec& v) const;

    /// Ambient coordinates not used as pivots; they index a complement basis.
    std::vector<int> complement_indices() const;

    /// (ambient-dim())×ambient matrix whose kernel is exactly this subspace;
    /// rows are the complement coordinates of the reduction map.
    Matrix quotient_map() const;

    bool operator==(const Subspace&) const = default;

private:
    int ambient_ = 0;
    Matrix basis_;
    std::vector<int> pivots_;
};

/// Decides t ∈ C⊗a + b⊗C inside the ambient tensor square, exactly.
bool tensor_subspace_sum_membership(const Subspace& a, const Subspace& b, const Tensor2& t);

}  // namespace rbcoalg
