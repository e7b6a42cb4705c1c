#include "rbcoalg/coalgebra.hpp"

#include <stdexcept>

namespace rbcoalg {

std::vector<std::string> default_names(int dim, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

std::vector<SparseEntry> sparse_entries(const Vec& v) {
    std::vector<SparseEntry> out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (!v[static_cast<std::size_t>(i)].is_zero()) out.push_back({{i}, v[static_cast<std::size_t>(i)]});
    }
    return out;
}

std::vector<SparseEntry> sparse_entries(const Tensor2& t) {
    std::vector<SparseEntry> out;
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            if (!t.at(i, j).is_zero()) out.push_back({{i, j}, t.at(i, j)});
    return out;
}

std::vector<SparseEntry> sparse_entries(const Tensor3& t) {
    std::vector<SparseEntry> out;
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k)
                if (!t.at(i, j, k).is_zero()) out.push_back({{i, j, k}, t.at(i, j, k)});
    return out;
}

Tensor2 apply_delta(const Coalgebra& c, const Vec& v) {
    if (static_cast<int>(v.size()) != c.dim) {
        throw std::invalid_argument("apply_delta: dimension mismatch");
    }
    Tensor2 out(c.dim);
    for (int k = 0; k < c.dim; ++k) {
        const Rational& vk = v[static_cast<std::size_t>(k)];
        if (vk.is_zero()) continue;
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (std::size_t p = 0; p < dk.a.size(); ++p) {
            if (!dk.a[p].is_zero()) out.a[p] += vk * dk.a[p];
        }
    }
    return out;
}

Rational apply_counit(const Coalgebra& c, const Vec& v) {
    if (!c.counital()) throw std::invalid_argument("apply_counit: coalgebra has no counit");
    return dot(*c.counit, v);
}

Report check_coassociativity(const Coalgebra& c) {
    for (int k = 0; k < c.dim; ++k) {
        Tensor3 left(c.dim);
        Tensor3 right(c.dim);
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        for (int i = 0; i < c.dim; ++i) {
            for (int j = 0; j < c.dim; ++j) {
                const Rational& mu = dk.at(i, j);
                if (mu.is_zero()) continue;
                // (Δ⊗id): expand the left slot e_i
                const Tensor2& di = c.delta[static_cast<std::size_t>(i)];
                for (int a = 0; a < c.dim; ++a)
                    for (int b = 0; b < c.dim; ++b)
                        if (!di.at(a, b).is_zero()) left.at(a, b, j) += mu * di.at(a, b);
                // (id⊗Δ): expand the right slot e_j
                const Tensor2& dj = c.delta[static_cast<std::size_t>(j)];
                for (int a = 0; a < c.dim; ++a)
                    for (int b = 0; b < c.dim; ++b)
                        if (!dj.at(a, b).is_zero()) right.at(i, a, b) += mu * dj.at(a, b);
            }
        }
        if (!(left == right)) {
            return Report::fail("coassociativity",
                                Counterexample{{k},
                                               "(delta⊗id)delta ≠ (id⊗delta)delta",
                                               sparse_entries(left),
                                               sparse_entries(right)});
        }
    }
    return Report::ok("coassociativity");
}

Report check_counit(const Coalgebra& c) {
    if (!c.counital()) throw std::invalid_argument("check_counit: coalgebra has no counit");
    const Vec& eps = *c.counit;
    for (int k = 0; k < c.dim; ++k) {
        const Tensor2& dk = c.delta[static_cast<std::size_t>(k)];
        Vec left(static_cast<std::size_t>(c.dim));
        Vec right(static_cast<std::size_t>(c.dim));
        for (int i = 0; i < c.dim; ++i) {
            for (int j = 0; j < c.dim; ++j) {
                const Rational& mu = dk.at(i, j);
                if (mu.is_zero()) continue;
                left[j] += mu * eps[static_cast<std::size_t>(i)];
                right[i] += mu * eps[static_cast<std::size_t>(j)];
            }
        }
        const Vec ek = unit_vec(c.dim, k);
        if (left != ek) {
            return Report::fail("counit", Counterexample{{k},
                                                         "(ε⊗id)delta ≠ id",
                                                         sparse_entries(left),
                                                         sparse_entries(ek)});
        }
        if (right != ek) {
            return Report::fail("counit", Counterexample{{k},
                                                         "(id⊗ε)delta ≠ id",
                                                         sparse_entries(right),
                                                         sparse_entries(ek)});
        }
    }
    return Report::ok("counit");
}

NTensor iterated_delta(const Coalgebra& c, const Vec& v, int k) {
    if (k < 1) throw std::invalid_argument("iterated_delta: k must be >= 1");
    if (static_cast<int>(v.size()) != c.dim) {
        throw std::invalid_argument("iterated_delta: dimension mismatch");
    }
    NTensor t = ntensor_from_vec(v);
    for (int step = 1; step < k; ++step) t = apply_delta_slot(t, 0, c.delta);
    return t;
}

bool check_grouplike(const Coalgebra& c, const Vec& v) {
    if (!c.counital()) throw std::invalid_argument("check_grouplike: coalgebra has no counit");
    if (static_cast<int>(v.size()) != c.dim) {
        throw std::invalid_argument("check_grouplike: dimension mismatch");
    }
    return apply_delta(c, v) == outer_product(v, v) && apply_counit(c, v) == 1;
}

}  // namespace rbcoalg
