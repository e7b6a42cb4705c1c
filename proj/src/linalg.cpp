#include "rbcoalg/linalg.hpp"

#include <stdexcept>

namespace rbcoalg {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec unit_vec(int n, int k) {
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(k)] = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vec_add: dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vec_sub: dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Rational& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: dimension mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rs) {
    if (rs.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        require(static_cast<int>(rs[r].size()) == m.cols, "from_rows: ragged rows");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rs[r][c];
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "mat_add: dimension mismatch");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = a.a[i] + b.a[i];
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "mat_sub: dimension mismatch");
    Matrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = a.a[i] - b.a[i];
    return out;
}

Matrix mat_scale(const Rational& s, const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = s * m.a[i];
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require(a.cols == b.rows, "mat_mul: dimension mismatch");
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Vec mat_apply(const Matrix& m, const Vec& v) {
    require(m.cols == static_cast<int>(v.size()), "mat_apply: dimension mismatch");
    Vec out(static_cast<std::size_t>(m.rows));
    for (int c = 0; c < m.cols; ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < m.rows; ++r) {
            const Rational& mrc = m.at(r, c);
            if (!mrc.is_zero()) out[r] += mrc * v[c];
        }
    }
    return out;
}

bool is_zero_matrix(const Matrix& m) {
    for (const auto& x : m.a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Tensor2 tensor2_add(const Tensor2& x, const Tensor2& y) {
    require(x.dim == y.dim, "tensor2_add: dimension mismatch");
    Tensor2 out(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
    return out;
}

Tensor2 tensor2_sub(const Tensor2& x, const Tensor2& y) {
    require(x.dim == y.dim, "tensor2_sub: dimension mismatch");
    Tensor2 out(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

Tensor2 tensor2_scale(const Rational& s, const Tensor2& x) {
    Tensor2 out(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = s * x.a[i];
    return out;
}

Tensor2 outer_product(const Vec& u, const Vec& v) {
    require(u.size() == v.size(), "outer_product: dimension mismatch");
    Tensor2 out(static_cast<int>(u.size()));
    for (int i = 0; i < out.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < out.dim; ++j) {
            if (!v[j].is_zero()) out.at(i, j) = u[i] * v[j];
        }
    }
    return out;
}

bool is_zero_tensor2(const Tensor2& t) {
    for (const auto& x : t.a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

namespace {

std::size_t pow_size(int dim, int rank) {
    std::size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
    return n;
}

}  // namespace

NTensor::NTensor(int d, int r) : dim(d), rank(r), a(pow_size(d, r)) {}

NTensor ntensor_from_vec(const Vec& v) {
    NTensor t(static_cast<int>(v.size()), 1);
    t.a = v;
    return t;
}

NTensor ntensor_from_tensor2(const Tensor2& t2) {
    NTensor t(t2.dim, 2);
    t.a = t2.a;
    return t;
}

Tensor2 ntensor_to_tensor2(const NTensor& t) {
    require(t.rank == 2, "ntensor_to_tensor2: rank must be 2");
    Tensor2 out(t.dim);
    out.a = t.a;
    return out;
}

Tensor3 ntensor_to_tensor3(const NTensor& t) {
    require(t.rank == 3, "ntensor_to_tensor3: rank must be 3");
    Tensor3 out(t.dim);
    out.a = t.a;
    return out;
}

NTensor ntensor_outer(const NTensor& x, const NTensor& y) {
    require(x.dim == y.dim, "ntensor_outer: dimension mismatch");
    NTensor out(x.dim, x.rank + y.rank);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (x.a[i].is_zero()) {
            pos += y.a.size();
            continue;
        }
        for (std::size_t j = 0; j < y.a.size(); ++j, ++pos) {
            if (!y.a[j].is_zero()) out.a[pos] = x.a[i] * y.a[j];
        }
    }
    return out;
}

NTensor apply_matrix_slot(const NTensor& t, int slot, const Matrix& m) {
    require(slot >= 0 && slot < t.rank, "apply_matrix_slot: bad slot");
    require(m.rows == t.dim && m.cols == t.dim, "apply_matrix_slot: dimension mismatch");
    const std::size_t inner = pow_size(t.dim, t.rank - slot - 1);
    const std::size_t d = static_cast<std::size_t>(t.dim);
    NTensor out(t.dim, t.rank);
    // flat index = (outer*dim + s)*inner + in
    const std::size_t outer_count = t.a.size() / (inner * d);
    for (std::size_t o = 0; o < outer_count; ++o) {
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t base = (o * d + s) * inner;
            for (std::size_t in = 0; in < inner; ++in) {
                const Rational& x = t.a[base + in];
                if (x.is_zero()) continue;
                for (std::size_t r = 0; r < d; ++r) {
                    const Rational& mrs = m.at(static_cast<int>(r), static_cast<int>(s));
                    if (mrs.is_zero()) continue;
                    out.a[(o * d + r) * inner + in] += mrs * x;
                }
            }
        }
    }
    return out;
}

NTensor apply_delta_slot(const NTensor& t, int slot, const std::vector<Tensor2>& delta) {
    require(slot >= 0 && slot < t.rank, "apply_delta_slot: bad slot");
    require(static_cast<int>(delta.size()) == t.dim, "apply_delta_slot: dimension mismatch");
    const std::size_t inner = pow_size(t.dim, t.rank - slot - 1);
    const std::size_t d = static_cast<std::size_t>(t.dim);
    NTensor out(t.dim, t.rank + 1);
    const std::size_t outer_count = t.a.size() / (inner * d);
    for (std::size_t o = 0; o < outer_count; ++o) {
        for (std::size_t c = 0; c < d; ++c) {
            const Tensor2& dc = delta[c];
            const std::size_t base = (o * d + c) * inner;
            for (std::size_t in = 0; in < inner; ++in) {
                const Rational& x = t.a[base + in];
                if (x.is_zero()) continue;
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t j = 0; j < d; ++j) {
                        const Rational& coeff = dc.at(static_cast<int>(i), static_cast<int>(j));
                        if (coeff.is_zero()) continue;
                        out.a[((o * d + i) * d + j) * inner + in] += coeff * x;
                    }
                }
            }
        }
    }
    return out;
}

Vec MultTable::product(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim) {
        throw std::invalid_argument("MultTable::product: dimension mismatch");
    }
    Vec out(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j].is_zero()) continue;
            const Rational uv = u[i] * v[j];
            for (int k = 0; k < dim; ++k) {
                const Rational& cijk = at(i, j, k);
                if (!cijk.is_zero()) out[k] += uv * cijk;
            }
        }
    }
    return out;
}

Vec MultTable::product_basis(int i, int j) const {
    Vec out(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) out[k] = at(i, j, k);
    return out;
}

NTensor multiply_slots(const NTensor& t, int slot, const MultTable& mult) {
    require(slot >= 0 && slot + 1 < t.rank, "multiply_slots: bad slot");
    require(mult.dim == t.dim, "multiply_slots: dimension mismatch");
    const std::size_t inner = pow_size(t.dim, t.rank - slot - 2);
    const std::size_t d = static_cast<std::size_t>(t.dim);
    NTensor out(t.dim, t.rank - 1);
    const std::size_t outer_count = t.a.size() / (inner * d * d);
    for (std::size_t o = 0; o < outer_count; ++o) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t base = ((o * d + i) * d + j) * inner;
                for (std::size_t in = 0; in < inner; ++in) {
                    const Rational& x = t.a[base + in];
                    if (x.is_zero()) continue;
                    for (std::size_t k = 0; k < d; ++k) {
                        const Rational& c =
                            mult.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
                        if (c.is_zero()) continue;
                        out.a[(o * d + k) * inner + in] += c * x;
                    }
                }
            }
        }
    }
    return out;
}

NTensor permute_slots(const NTensor& t, const std::vector<int>& src_of_dst) {
    require(static_cast<int>(src_of_dst.size()) == t.rank, "permute_slots: bad permutation");
    const int r = t.rank;
    const std::size_t d = static_cast<std::size_t>(t.dim);
    NTensor out(t.dim, r);
    std::vector<std::size_t> idx(static_cast<std::size_t>(r));
    for (std::size_t flat = 0; flat < t.a.size(); ++flat) {
        if (t.a[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (int s = r - 1; s >= 0; --s) {
            idx[s] = rem % d;
            rem /= d;
        }
        std::size_t dst = 0;
        for (int s = 0; s < r; ++s) dst = dst * d + idx[static_cast<std::size_t>(src_of_dst[s])];
        out.a[dst] = t.a[flat];
    }
    return out;
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).first; }

std::pair<Matrix, std::vector<int>> rref_with_pivots(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols && row < r.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < r.rows; ++i) {
            if (!r.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < r.cols; ++c) std::swap(r.at(pivot, c), r.at(row, c));
        }
        const Rational inv = Rational(1) / r.at(row, col);
        for (int c = col; c < r.cols; ++c) r.at(row, c) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == row) continue;
            const Rational factor = r.at(i, col);
            if (factor.is_zero()) continue;
            for (int c = col; c < r.cols; ++c) r.at(i, c) -= factor * r.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {r, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref_with_pivots(m).second.size()); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto [red, pivots] = rref_with_pivots(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim) {
            throw std::invalid_argument("Subspace::span: vector has wrong dimension");
        }
    }
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const auto [red, pivots] = rref_with_pivots(Matrix::from_rows(vectors));
    Matrix basis(static_cast<int>(pivots.size()), ambient_dim);
    for (int r = 0; r < basis.rows; ++r)
        for (int c = 0; c < ambient_dim; ++c) basis.at(r, c) = red.at(r, c);
    s.basis_ = basis;
    s.pivots_ = pivots;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(ambient_dim));
    for (int i = 0; i < ambient_dim; ++i) rows.push_back(unit_vec(ambient_dim, i));
    return span(ambient_dim, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
        throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    }
    Vec w = v;
    for (int r = 0; r < basis_.rows; ++r) {
        const Rational coeff = w[static_cast<std::size_t>(pivots_[r])];
        if (coeff.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) w[c] -= coeff * basis_.at(r, c);
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

std::optional<Vec> Subspace::solve_membership(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec coeffs(static_cast<std::size_t>(basis_.rows));
    for (int r = 0; r < basis_.rows; ++r) coeffs[r] = v[static_cast<std::size_t>(pivots_[r])];
    return coeffs;
}

std::vector<int> Subspace::complement_indices() const {
    std::vector<int> out;
    std::size_t p = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Matrix Subspace::quotient_map() const {
    const auto comp = complement_indices();
    Matrix m(static_cast<int>(comp.size()), ambient_);
    for (int col = 0; col < ambient_; ++col) {
        const Vec res = reduce(unit_vec(ambient_, col));
        for (std::size_t u = 0; u < comp.size(); ++u) {
            m.at(static_cast<int>(u), col) = res[static_cast<std::size_t>(comp[u])];
        }
    }
    return m;
}

bool tensor_subspace_sum_membership(const Subspace& a, const Subspace& b, const Tensor2& t) {
    if (a.ambient() != b.ambient() || t.dim != a.ambient()) {
        throw std::invalid_argument("tensor_subspace_sum_membership: dimension mismatch");
    }
    // t ∈ C⊗a + b⊗C  iff  (π_b ⊗ π_a)(t) = 0, with π the quotient maps.
    const Matrix mb = b.quotient_map();
    const Matrix ma = a.quotient_map();
    Matrix coeff(t.dim, t.dim);
    coeff.a = t.a;
    return is_zero_matrix(mat_mul(mat_mul(mb, coeff), ma.transpose()));
}

}  // namespace rbcoalg
