#include "rbcoalg/hopf.hpp"

#include <stdexcept>

namespace rbcoalg {

Coalgebra HopfAlgebra::coalgebra() const {
    Coalgebra c;
    c.dim = dim;
    c.basis_names = basis_names;
    c.delta = delta;
    c.counit = counit;
    return c;
}

namespace {

Counterexample vec_counterexample(std::vector<int> basis, std::string detail, const Vec& lhs,
                                  const Vec& rhs) {
    return Counterexample{std::move(basis), std::move(detail), sparse_entries(lhs),
                          sparse_entries(rhs)};
}

/// Product on H⊗H: (a⊗b)(c⊗d) = ac⊗bd, applied to two Tensor2 coefficients.
Tensor2 tensor_square_product(const MultTable& mult, const Tensor2& x, const Tensor2& y) {
    const int d = x.dim;
    Tensor2 out(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rational& xa = x.at(a, b);
            if (xa.is_zero()) continue;
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    const Rational& ye = y.at(c, e);
                    if (ye.is_zero()) continue;
                    const Rational coeff = xa * ye;
                    const Vec left = mult.product_basis(a, c);
                    const Vec right = mult.product_basis(b, e);
                    for (int p = 0; p < d; ++p) {
                        if (left[p].is_zero()) continue;
                        for (int q = 0; q < d; ++q) {
                            if (!right[q].is_zero()) out.at(p, q) += coeff * left[p] * right[q];
                        }
                    }
                }
        }
    return out;
}

}  // namespace

Report check_hopf_axioms(const HopfAlgebra& h) {
    const std::string name = "hopf-axioms";
    // associativity
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j)
            for (int k = 0; k < h.dim; ++k) {
                const Vec left = h.mult.product(h.mult.product_basis(i, j), unit_vec(h.dim, k));
                const Vec right = h.mult.product(unit_vec(h.dim, i), h.mult.product_basis(j, k));
                if (left != right) {
                    return Report::fail(
                        name, vec_counterexample({i, j, k}, "associativity", left, right));
                }
            }
    // unit laws
    for (int k = 0; k < h.dim; ++k) {
        const Vec ek = unit_vec(h.dim, k);
        const Vec lu = h.mult.product(h.unit, ek);
        if (lu != ek) return Report::fail(name, vec_counterexample({k}, "left unit", lu, ek));
        const Vec ru = h.mult.product(ek, h.unit);
        if (ru != ek) return Report::fail(name, vec_counterexample({k}, "right unit", ru, ek));
    }
    // coassociativity and counit
    const Coalgebra c = h.coalgebra();
    if (const Report r = check_coassociativity(c); !r.pass) {
        return Report::fail(name, Counterexample{r.counterexample->basis, "coassociativity",
                                                 r.counterexample->lhs, r.counterexample->rhs});
    }
    if (const Report r = check_counit(c); !r.pass) {
        return Report::fail(name, Counterexample{r.counterexample->basis, "counit",
                                                 r.counterexample->lhs, r.counterexample->rhs});
    }
    // bialgebra compatibility
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) {
            const Tensor2 lhs = apply_delta(c, h.mult.product_basis(i, j));
            const Tensor2 rhs = tensor_square_product(
                h.mult, h.delta[static_cast<std::size_t>(i)], h.delta[static_cast<std::size_t>(j)]);
            if (!(lhs == rhs)) {
                return Report::fail(name, Counterexample{{i, j},
                                                         "delta is not multiplicative",
                                                         sparse_entries(lhs),
                                                         sparse_entries(rhs)});
            }
            const Rational el = apply_counit(c, h.mult.product_basis(i, j));
            const Rational er = h.counit[static_cast<std::size_t>(i)] *
                                h.counit[static_cast<std::size_t>(j)];
            if (el != er) {
                return Report::fail(name, Counterexample{{i, j},
                                                         "counit is not multiplicative",
                                                         {{std::vector<int>{}, el}},
                                                         {{std::vector<int>{}, er}}});
            }
        }
    {
        const Tensor2 du = apply_delta(c, h.unit);
        const Tensor2 uu = outer_product(h.unit, h.unit);
        if (!(du == uu)) {
            return Report::fail(name, Counterexample{{}, "delta(1) ≠ 1⊗1", sparse_entries(du),
                                                     sparse_entries(uu)});
        }
        const Rational eu = apply_counit(c, h.unit);
        if (eu != 1) {
            return Report::fail(
                name, Counterexample{{}, "ε(1) ≠ 1", {{std::vector<int>{}, eu}}, {}});
        }
    }
    // antipode law: m(S⊗id)Δ = uε = m(id⊗S)Δ
    for (int k = 0; k < h.dim; ++k) {
        const Tensor2& dk = h.delta[static_cast<std::size_t>(k)];
        Vec left(static_cast<std::size_t>(h.dim));
        Vec right(static_cast<std::size_t>(h.dim));
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                const Rational& mu = dk.at(i, j);
                if (mu.is_zero()) continue;
                const Vec ls = h.mult.product(h.antipode.col(i), unit_vec(h.dim, j));
                const Vec rs = h.mult.product(unit_vec(h.dim, i), h.antipode.col(j));
                for (int p = 0; p < h.dim; ++p) {
                    if (!ls[p].is_zero()) left[p] += mu * ls[p];
                    if (!rs[p].is_zero()) right[p] += mu * rs[p];
                }
            }
        const Vec expect = vec_scale(h.counit[static_cast<std::size_t>(k)], h.unit);
        if (left != expect) {
            return Report::fail(name, vec_counterexample({k}, "antipode law (S⊗id)", left, expect));
        }
        if (right != expect) {
            return Report::fail(name,
                                vec_counterexample({k}, "antipode law (id⊗S)", right, expect));
        }
    }
    return Report::ok(name);
}

HopfAlgebra group_algebra(int n) {
    if (n < 1) throw std::invalid_argument("group_algebra: order must be at least 1");
    HopfAlgebra h;
    h.dim = n;
    h.basis_names.push_back("1");
    for (int k = 1; k < n; ++k) {
        h.basis_names.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
    }
    h.mult = MultTable(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.mult.at(i, j, (i + j) % n) = 1;
    h.unit = unit_vec(n, 0);
    h.delta.assign(static_cast<std::size_t>(n), Tensor2(n));
    for (int k = 0; k < n; ++k) h.delta[static_cast<std::size_t>(k)].at(k, k) = 1;
    h.counit = Vec(static_cast<std::size_t>(n), Rational(1));
    h.antipode = Matrix(n, n);
    for (int k = 0; k < n; ++k) h.antipode.at((n - k) % n, k) = 1;
    return h;
}

HopfAlgebra sweedler_h4() {
    // Basis 0:1, 1:g, 2:x, 3:gx with g² = 1, x² = 0, xg = −gx.
    HopfAlgebra h;
    h.dim = 4;
    h.basis_names = {"1", "g", "x", "gx"};
    h.mult = MultTable(4);
    const auto set = [&h](int i, int j, int k, int v) { h.mult.at(i, j, k) = v; };
    for (int j = 0; j < 4; ++j) set(0, j, j, 1);  // 1·y = y
    set(1, 0, 1, 1);                              // g·1 = g
    set(1, 1, 0, 1);                              // g·g = 1
    set(1, 2, 3, 1);                              // g·x = gx
    set(1, 3, 2, 1);                              // g·gx = x
    set(2, 0, 2, 1);                              // x·1 = x
    set(2, 1, 3, -1);                             // x·g = −gx
    set(3, 0, 3, 1);                              // gx·1 = gx
    set(3, 1, 2, -1);                             // gx·g = −x
    h.unit = unit_vec(4, 0);
    h.delta.assign(4, Tensor2(4));
    h.delta[0].at(0, 0) = 1;                      // Δ(1) = 1⊗1
    h.delta[1].at(1, 1) = 1;                      // Δ(g) = g⊗g
    h.delta[2].at(2, 0) = 1;                      // Δ(x) = x⊗1 + g⊗x
    h.delta[2].at(1, 2) = 1;
    h.delta[3].at(3, 1) = 1;                      // Δ(gx) = gx⊗g + 1⊗gx
    h.delta[3].at(0, 3) = 1;
    h.counit = {Rational(1), Rational(1), Rational(0), Rational(0)};
    h.antipode = Matrix(4, 4);
    h.antipode.at(0, 0) = 1;   // S(1) = 1
    h.antipode.at(1, 1) = 1;   // S(g) = g
    h.antipode.at(3, 2) = -1;  // S(x) = −gx
    h.antipode.at(2, 3) = 1;   // S(gx) = x
    return h;
}

namespace {

void require_hopf(const HopfAlgebra& h, const char* who) {
    if (!check_hopf_axioms(h).pass) {
        throw std::invalid_argument(std::string(who) + ": invalid Hopf input");
    }
}

int pair_index(int dim, int a, int b) { return a * dim + b; }

}  // namespace

Coalgebra smash_coalgebra(const HopfAlgebra& h) {
    require_hopf(h, "smash_coalgebra");
    const int d = h.dim;
    const int n = d * d;
    Coalgebra c;
    c.dim = n;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            c.basis_names.push_back(h.basis_names[static_cast<std::size_t>(a)] + "⊗" +
                                    h.basis_names[static_cast<std::size_t>(b)]);
        }
    c.delta.assign(static_cast<std::size_t>(n), Tensor2(n));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            // state [a, b] -> [a1, a2, a3, a4, b1, b2]
            NTensor t = ntensor_outer(ntensor_from_vec(unit_vec(d, a)),
                                      ntensor_from_vec(unit_vec(d, b)));
            t = apply_delta_slot(t, 0, h.delta);
            t = apply_delta_slot(t, 0, h.delta);
            t = apply_delta_slot(t, 0, h.delta);
            t = apply_delta_slot(t, 4, h.delta);
            t = apply_matrix_slot(t, 3, h.antipode);      // S(a4)
            t = permute_slots(t, {0, 1, 3, 4, 2, 5});     // [a1, a2, S4, b1, a3, b2]
            t = multiply_slots(t, 1, h.mult);             // a2·S4
            t = multiply_slots(t, 1, h.mult);             // (a2·S4)·b1
            // slots now [a1, a2 S(a4) b1, a3, b2]
            Tensor2& dst = c.delta[static_cast<std::size_t>(pair_index(d, a, b))];
            const std::size_t dd = static_cast<std::size_t>(d);
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    for (int r = 0; r < d; ++r)
                        for (int s = 0; s < d; ++s) {
                            const Rational& val =
                                t.a[((static_cast<std::size_t>(p) * dd + q) * dd + r) * dd + s];
                            if (!val.is_zero()) {
                                dst.at(pair_index(d, p, q), pair_index(d, r, s)) = val;
                            }
                        }
        }
    }
    Vec eps(static_cast<std::size_t>(n));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            eps[static_cast<std::size_t>(pair_index(d, a, b))] =
                h.counit[static_cast<std::size_t>(a)] * h.counit[static_cast<std::size_t>(b)];
        }
    c.counit = eps;
    return c;
}

LinearOperator smash_p1(const HopfAlgebra& h) {
    require_hopf(h, "smash_p1");
    const int d = h.dim;
    LinearOperator p(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Rational& eb = h.counit[static_cast<std::size_t>(b)];
            if (eb.is_zero()) continue;
            for (int u = 0; u < d; ++u) {
                const Rational& uu = h.unit[static_cast<std::size_t>(u)];
                if (!uu.is_zero()) p.at(pair_index(d, a, u), pair_index(d, a, b)) = eb * uu;
            }
        }
    return p;
}

LinearOperator smash_p2(const HopfAlgebra& h) {
    require_hopf(h, "smash_p2");
    const int d = h.dim;
    LinearOperator p(d * d, d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            // state [a, b] -> [a1..a5, b1..b3]
            NTensor t = ntensor_outer(ntensor_from_vec(unit_vec(d, a)),
                                      ntensor_from_vec(unit_vec(d, b)));
            for (int i = 0; i < 4; ++i) t = apply_delta_slot(t, 0, h.delta);
            t = apply_delta_slot(t, 5, h.delta);
            t = apply_delta_slot(t, 5, h.delta);
            // slots: 0:a1 1:a2 2:a3 3:a4 4:a5 5:b1 6:b2 7:b3
            t = apply_matrix_slot(t, 3, h.antipode);            // S(a4)
            t = permute_slots(t, {1, 3, 6, 2, 0, 4, 5, 7});     // [a2,S4,b2,a3,a1,a5,b1,b3]
            t = multiply_slots(t, 0, h.mult);                   // a2·S4
            t = multiply_slots(t, 0, h.mult);                   // ·b2
            t = apply_matrix_slot(t, 0, h.antipode);            // S(a2 S(a4) b2)
            t = multiply_slots(t, 0, h.mult);                   // ·a3  -> first factor
            // slots: [F, a1, a5, b1, b3]
            t = apply_matrix_slot(t, 2, h.antipode);            // S(a5)
            t = multiply_slots(t, 1, h.mult);                   // a1·S(a5)
            t = multiply_slots(t, 1, h.mult);                   // ·b1
            t = apply_matrix_slot(t, 1, h.antipode);            // S(a1 S(a5) b1)
            t = multiply_slots(t, 1, h.mult);                   // ·b3  -> second factor
            // rank 2: [F, G]
            const Tensor2 out = ntensor_to_tensor2(t);
            for (int f = 0; f < d; ++f)
                for (int g = 0; g < d; ++g) {
                    const Rational& val = out.at(f, g);
                    if (!val.is_zero()) {
                        p.at(pair_index(d, f, g), pair_index(d, a, b)) = val;
                    }
                }
        }
    }
    return p;
}

NTensor diagonal_action_n(const HopfAlgebra& h, const Vec& hv, const NTensor& t) {
    if (static_cast<int>(hv.size()) != h.dim || t.dim != h.dim) {
        throw std::invalid_argument("diagonal_action: dimension mismatch");
    }
    const int k = t.rank;
    // state [h, t_0..t_{k-1}]; finished slots accumulate at the back
    NTensor act = ntensor_outer(ntensor_from_vec(hv), t);
    for (int i = 0; i < k; ++i) {
        const int pending = k - i;  // untouched t-slots, starting at slot 1
        if (pending > 1) {
            act = apply_delta_slot(act, 0, h.delta);  // [h', h'', t_i, rest..., done...]
            std::vector<int> perm;
            perm.push_back(0);  // h' stays for the multiplication
            perm.push_back(2);  // t_i
            perm.push_back(1);  // h'' waits
            for (int s = 3; s < act.rank; ++s) perm.push_back(s);
            act = permute_slots(act, perm);           // [h', t_i, h'', rest..., done...]
            act = multiply_slots(act, 0, h.mult);     // [r_i, h'', rest..., done...]
            std::vector<int> rotate;
            for (int s = 1; s < act.rank; ++s) rotate.push_back(s);
            rotate.push_back(0);
            act = permute_slots(act, rotate);         // [h'', rest..., done..., r_i]
        } else {
            act = multiply_slots(act, 0, h.mult);     // [r_last, done...]
            std::vector<int> rotate;
            for (int s = 1; s < act.rank; ++s) rotate.push_back(s);
            rotate.push_back(0);
            act = permute_slots(act, rotate);         // [done..., r_last]
        }
    }
    return act;
}

Tensor2 diagonal_action(const HopfAlgebra& h, const Vec& hv, const Tensor2& t) {
    return ntensor_to_tensor2(diagonal_action_n(h, hv, ntensor_from_tensor2(t)));
}

}  // namespace rbcoalg
